"""The additive companion of the duplication formula and its series form.

The finite identity expresses (2**(z-1)/sqrt(pi)) * Gamma((z+m+1)/2) *
Gamma((z-m)/2) as a sum of m+1 gamma values at unit shifts; m = 0 is the
duplication formula rearranged.  Replacing the two half-arguments by free
parameters (w, z) turns the sum into an infinite series with a sin/cos
closed form, and the proof machinery (a 2F1 evaluated at 1/2, the Euler
transformation, Gauss's second summation theorem) is exposed here as
checkable operations.  An exact binomial identity that falls out of the
coefficient algebra is verified in rational arithmetic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import gamma, pochhammer, pole_distance
from .errors import ConvergenceError, DomainError, PoleError

_LN2 = math.log(2.0)
_SQRT_PI = math.sqrt(math.pi)

# Beyond this index the per-term gamma/Pochhammer factors can individually
# leave the double range even though the term itself is tiny; the tail is
# continued by the exact term-ratio recurrence instead.
_DIRECT_TERM_LIMIT = 60


@dataclass(frozen=True)
class SchlomilchCoefficients:
    """The even coefficients M_0, M_2, ..., M_{2m}.

    M_{2n} = (m-n+1)_{2n} / (2n)!, which collapses to the binomial
    coefficient C(m+n, 2n) — a nonnegative integer, with M_0 = 1.
    """

    m: int
    coefficients: tuple

    @classmethod
    def build(cls, m: int) -> "SchlomilchCoefficients":
        if m < 0:
            raise DomainError(f"m must be >= 0, got {m}")
        coeffs = tuple(float(math.comb(m + n, 2 * n)) for n in range(m + 1))
        return cls(m=m, coefficients=coeffs)


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a truncated series evaluation."""

    value: complex
    terms_used: int
    last_term_magnitude: float
    converged: bool

    def to_json_dict(self) -> dict:
        return {
            "value": [self.value.real, self.value.imag],
            "terms": self.terms_used,
            "last_term": self.last_term_magnitude,
            "converged": self.converged,
        }


@dataclass(frozen=True)
class Hyp2F1Params:
    """Parameter triple (a, b; c) for a hypergeometric series at 1/2."""

    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        if pole_distance(self.c) <= 1e-10:
            raise DomainError(
                f"c = {self.c!r} is within 1e-10 of a non-positive integer"
            )


def schlomilch_finite_lhs(m: int, z: complex) -> complex:
    """Closed form (2**(z-1)/sqrt(pi)) * Gamma((z+m+1)/2) * Gamma((z-m)/2)."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    z = complex(z)
    if not z.real > m:
        raise DomainError(f"need Re z > m, got Re z = {z.real} with m = {m}")
    scale = cmath.exp((z - 1.0) * _LN2) / _SQRT_PI
    return scale * gamma(0.5 * (z + m + 1.0)) * gamma(0.5 * (z - m))


def schlomilch_finite_rhs(m: int, z: complex) -> complex:
    """The m+1-term sum: sum_n Gamma(z-n) * (m-n+1)_{2n} / (2**n n!).

    Ascending n with compensated summation; for real z > m every term is
    positive so there is nothing to cancel.
    """
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    z = complex(z)
    if not z.real > m:
        raise DomainError(f"need Re z > m, got Re z = {z.real} with m = {m}")
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j  # Kahan compensation
    for n in range(m + 1):
        # (m-n+1)_{2n} / (2^n n!) is rational; keep it exact until the multiply
        factor = Fraction(
            math.perm(m + n, 2 * n), 2**n * math.factorial(n)
        )
        term = gamma(z - n) * float(factor)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def generalized_lhs(w: complex, z: complex) -> complex:
    """Closed form of the two-parameter series, in the product shape

        -2**(w+z-1/2) * Gamma(w) * Gamma(z) * sin(pi w) * sin(pi z)
            / (sqrt(pi) * cos(pi (w+z)))

    which agrees with 2**(w+z) Gamma(w) Gamma(z) / (sqrt(2 pi) (1 - cot(pi w)
    cot(pi z))) wherever the cot form is defined, and extends it by
    continuity (value 0) to positive-integer w or z.
    """
    w = complex(w)
    z = complex(z)
    _check_generalized_args(w, z)
    num = (
        -cmath.exp((w + z - 0.5) * _LN2)
        * gamma(w)
        * gamma(z)
        * cmath.sin(math.pi * w)
        * cmath.sin(math.pi * z)
    )
    return num / (_SQRT_PI * cmath.cos(math.pi * (w + z)))


def _check_generalized_args(w: complex, z: complex) -> None:
    s = w + z - 0.5
    if abs(s - round(s.real)) <= 1e-8:
        raise DomainError(
            f"w+z-1/2 = {s!r} is within 1e-8 of an integer (cosine pole)"
        )
    for p, name in ((w, "w"), (z, "z")):
        if pole_distance(p) <= 1e-8:
            raise DomainError(f"{name} = {p!r} is within 1e-8 of a pole of Gamma")


def _generalized_term_direct(s: complex, u: complex, n: int):
    """Term n = Gamma(s-n) * (u-n)_{2n} / (2**n n!), or None on range trouble."""
    g = gamma(s - n)
    p = pochhammer(u - n, 2 * n)
    denom = math.exp(n * _LN2 + math.lgamma(n + 1))
    t = g * p / denom
    if math.isfinite(t.real) and math.isfinite(t.imag):
        return t
    return None


def _generalized_term_ratio(s: complex, u: complex, n: int) -> complex:
    """Exact ratio term_{n+1}/term_n of the generalized series."""
    return ((u - n - 1.0) * (u + n)) / ((s - n - 1.0) * 2.0 * (n + 1.0))


def generalized_series(w: complex, z: complex, tolerance: float, max_terms: int) -> SeriesResult:
    """Partial sums of sum_n Gamma(w+z-n-1/2) * (w-z-n+1/2)_{2n} / (2**n n!).

    Stops once three consecutive terms fall below tolerance * |partial sum|
    (isolated terms can be anomalously small when a Pochhammer factor nearly
    vanishes); reports converged=False if max_terms is reached first.  Gamma
    at negative real parts goes through the reflection path inside gamma();
    deep-tail terms whose factors leave the double range are continued with
    the term-ratio recurrence, harmless because those terms are negligible.
    """
    if not tolerance > 0:
        raise DomainError(f"tolerance must be > 0, got {tolerance}")
    if max_terms < 1:
        raise DomainError(f"max_terms must be >= 1, got {max_terms}")
    w = complex(w)
    z = complex(z)
    _check_generalized_args(w, z)
    s = w + z - 0.5
    u = w - z + 0.5
    total = 0.0 + 0.0j
    term = None
    small_streak = 0
    terms_used = 0
    last_mag = math.inf
    for n in range(max_terms):
        if n <= _DIRECT_TERM_LIMIT:
            direct = _generalized_term_direct(s, u, n)
        else:
            direct = None
        if direct is not None:
            term = direct
        elif term is not None:
            term = term * _generalized_term_ratio(s, u, n - 1)
        else:  # pragma: no cover - first term is always representable
            raise ConvergenceError("series head not representable in doubles")
        total += term
        terms_used = n + 1
        last_mag = abs(term)
        if last_mag <= tolerance * abs(total):
            small_streak += 1
            if small_streak >= 3:
                return SeriesResult(total, terms_used, last_mag, True)
        else:
            small_streak = 0
    return SeriesResult(total, terms_used, last_mag, False)


def hyp2f1_half(p: Hyp2F1Params, tolerance: float, max_terms: int) -> SeriesResult:
    """The Gauss series sum_n (a)_n (b)_n / ((c)_n n!) * (1/2)**n.

    Same three-small-terms stopping rule as the generalized series, but
    exhaustion of max_terms raises ConvergenceError here — downstream
    residual checks have no use for an unconverged value.
    """
    if not tolerance > 0:
        raise DomainError(f"tolerance must be > 0, got {tolerance}")
    if max_terms < 1:
        raise DomainError(f"max_terms must be >= 1, got {max_terms}")
    term = 1.0 + 0.0j
    total = 0.0 + 0.0j
    small_streak = 0
    for n in range(max_terms):
        total += term
        mag = abs(term)
        if mag <= tolerance * abs(total):
            small_streak += 1
            if small_streak >= 3:
                return SeriesResult(total, n + 1, mag, True)
        else:
            small_streak = 0
        term = term * (p.a + n) * (p.b + n) / ((p.c + n) * (n + 1.0)) * 0.5
    raise ConvergenceError(
        f"2F1 series did not converge within {max_terms} terms at {p!r}"
    )


def gauss_second_summation(a: complex, b: complex) -> complex:
    """Closed form of 2F1(a, b; (a+b+1)/2; 1/2):

        Gamma(1/2) * Gamma((a+b+1)/2) / (Gamma((a+1)/2) * Gamma((b+1)/2)).
    """
    a = complex(a)
    b = complex(b)
    args = (0.5 * (a + 1.0), 0.5 * (b + 1.0), 0.5 * (a + b + 1.0))
    for p in args:
        if pole_distance(p) <= 1e-8:
            raise PoleError(f"argument {p!r} is within 1e-8 of a pole of Gamma")
    return _SQRT_PI * gamma(args[2]) / (gamma(args[0]) * gamma(args[1]))


def euler_transform_residual(p: Hyp2F1Params) -> float:
    """Residual of 2F1(a,b;c;1/2) = (1/2)**(c-a-b) * 2F1(c-a, c-b; c; 1/2)."""
    lhs = hyp2f1_half(p, 1e-13, 1000).value
    q = Hyp2F1Params(p.c - p.a, p.c - p.b, p.c)
    rhs = cmath.exp(-(p.c - p.a - p.b) * _LN2) * hyp2f1_half(q, 1e-13, 1000).value
    scale = max(abs(lhs), abs(rhs))
    diff = abs(lhs - rhs)
    if scale < 1e-3:
        return diff
    return diff / scale


def binomial_identity_check(m: int, l: int):
    """Exact check of C(m+l, m) = sum_n 2**-(m+n) C(m+n, m) C(2l+m-n, 2l).

    Returns (lhs, rhs, equal) with both sides as Fractions.
    """
    if m < 0 or l < 0:
        raise DomainError(f"m and l must be >= 0, got ({m}, {l})")
    lhs = Fraction(math.comb(m + l, m))
    rhs = Fraction(0)
    for n in range(m + 1):
        rhs += Fraction(
            math.comb(m + n, m) * math.comb(2 * l + m - n, 2 * l), 2 ** (m + n)
        )
    return lhs, rhs, lhs == rhs
