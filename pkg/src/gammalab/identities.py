"""Residual checks for the classical gamma and trigonometric identities.

Each ``residual_*`` function evaluates both sides of one identity at a point
and returns a scale-free residual: relative in ``max(|lhs|, |rhs|)`` when at
least one side is appreciable, absolute when both sides are tiny (identities
with zeros, such as the sine factorization at integers, need the fallback).
``verify_grid`` drives any of them over a seeded random sample and aggregates
the result into an :class:`IdentityReport`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import gamma, pole_distance
from .errors import DomainError, EmptyGridError, PoleError

_SQRT_PI = math.sqrt(math.pi)
_TWO_PI = 2.0 * math.pi

# Below this magnitude on both sides, relative residuals are meaningless in
# doubles and we report the absolute difference instead.
_ABS_FALLBACK = 1e-3

# Minimum pole clearance demanded by the point-wise residual functions.  The
# sampling layer uses a larger radius (SampleSpec.pole_exclusion).
_MIN_CLEARANCE = 1e-6


def _residual(lhs: complex, rhs: complex) -> float:
    scale = max(abs(lhs), abs(rhs))
    diff = abs(lhs - rhs)
    if scale < _ABS_FALLBACK:
        return diff
    return diff / scale


def _require_clear(*points: complex) -> None:
    for p in points:
        if pole_distance(p) <= _MIN_CLEARANCE:
            raise PoleError(f"argument {p!r} is within {_MIN_CLEARANCE} of a pole")


def residual_functional(z: complex) -> float:
    """Residual of the functional relation Gamma(z+1) = z*Gamma(z).

    Normalized by |Gamma(z+1)|, which never vanishes.
    """
    z = complex(z)
    _require_clear(z, z + 1.0)
    lhs = gamma(z + 1.0)
    rhs = z * gamma(z)
    return abs(lhs - rhs) / abs(lhs)


def residual_reflection(z: complex) -> float:
    """Residual of Gamma(z)*Gamma(1-z) = pi / sin(pi*z).

    Raises DomainError within 1e-6 of any integer, where both sides blow up.
    """
    z = complex(z)
    nearest = round(z.real)
    if abs(z - nearest) <= _MIN_CLEARANCE:
        raise DomainError(f"{z!r} is within {_MIN_CLEARANCE} of an integer")
    lhs = gamma(z) * gamma(1.0 - z)
    rhs = math.pi / cmath.sin(math.pi * z)
    return _residual(lhs, rhs)


def residual_duplication(z: complex) -> float:
    """Residual of sqrt(pi)*Gamma(z) = 2**(z-1) * Gamma(z/2) * Gamma(z/2 + 1/2)."""
    z = complex(z)
    _require_clear(z, 0.5 * z, 0.5 * z + 0.5)
    lhs = _SQRT_PI * gamma(z)
    rhs = cmath.exp((z - 1.0) * math.log(2.0)) * gamma(0.5 * z) * gamma(0.5 * z + 0.5)
    return _residual(lhs, rhs)


def residual_multiplication(n: int, z: complex) -> float:
    """Residual of the order-n multiplication formula.

    (2*pi)**((n-1)/2) * n**(1/2 - z) * Gamma(z) = prod_{j=0}^{n-1} Gamma(z/n + j/n).
    The n = 2 case coincides with the duplication identity.
    """
    if n < 1:
        raise DomainError(f"multiplication order must be >= 1, got {n}")
    z = complex(z)
    args = [(z + j) / n for j in range(n)]
    _require_clear(z, *args)
    lhs = _TWO_PI ** (0.5 * (n - 1)) * cmath.exp((0.5 - z) * math.log(n)) * gamma(z)
    rhs = 1.0 + 0.0j
    for a in args:
        rhs *= gamma(a)
    return _residual(lhs, rhs)


def residual_sine_factorization(k: int, z: complex) -> float:
    """Residual of sin(pi*z) = 2**(k-1) * prod_{j=0}^{k-1} sin(pi*(z+j)/k).

    Degenerates gracefully at integers: both sides vanish there and the
    residual switches to absolute.
    """
    if k < 1:
        raise DomainError(f"factorization order must be >= 1, got {k}")
    z = complex(z)
    lhs = cmath.sin(math.pi * z)
    rhs = 2.0 ** (k - 1)
    for j in range(k):
        rhs *= cmath.sin(math.pi * (z + j) / k)
    return _residual(lhs, rhs)


def residual_comb(alpha: float) -> float:
    """Residual of the quarter-step relation

        Gamma(4a) * Gamma(1/4 - a)
            = 2**(6a - 3/2) * Gamma(2a) * Gamma(a + 1/4) / sin(pi*(a + 3/4))

    for real a in the open interval (0, 1/4).
    """
    alpha = float(alpha)
    if not 0.0 < alpha < 0.25:
        raise DomainError(f"alpha must lie in (0, 1/4), got {alpha}")
    _require_clear(4.0 * alpha, 0.25 - alpha, 2.0 * alpha, alpha + 0.25)
    lhs = gamma(4.0 * alpha) * gamma(0.25 - alpha)
    rhs = (
        2.0 ** (6.0 * alpha - 1.5)
        * gamma(2.0 * alpha)
        * gamma(alpha + 0.25)
        / math.sin(math.pi * (alpha + 0.75))
    )
    return _residual(lhs, rhs)


def residual_cosine_identity(m: int, u: complex) -> float:
    """Residual of the odd-order cosine expansion, k = 2m + 1:

        cos(k*u) = cos(u) * sum_{n=0}^{m} (-1)^n / (2n)! * sin(u)**(2n)
                                         * prod_{j=1}^{n} (k**2 - (2j-1)**2)

    Relative when |cos(k*u)| > 1e-3, absolute otherwise.
    """
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    u = complex(u)
    k = 2 * m + 1
    lhs = cmath.cos(k * u)
    s = cmath.sin(u)
    s2 = s * s
    acc = 0.0 + 0.0j
    term = 1.0 + 0.0j  # (-1)^n/(2n)! * sin^{2n} * prod, built incrementally
    for n in range(m + 1):
        if n > 0:
            j = 2 * n - 1
            term *= -s2 * (k * k - j * j) / ((2 * n) * (2 * n - 1))
        acc += term
    rhs = cmath.cos(u) * acc
    diff = abs(lhs - rhs)
    if abs(lhs) > _ABS_FALLBACK:
        return diff / abs(lhs)
    return diff


def nonvanishing_scan(re_range, im_range, step):
    """Scan |Gamma| over a rectangular grid and return (min_modulus, argmin).

    Grid points closer than 0.05 to a pole are skipped.  Raises EmptyGridError
    when the grid is empty or every point was skipped.
    """
    if not step > 0:
        raise DomainError(f"step must be > 0, got {step}")
    re_lo, re_hi = float(re_range[0]), float(re_range[1])
    im_lo, im_hi = float(im_range[0]), float(im_range[1])
    if re_hi < re_lo or im_hi < im_lo:
        raise DomainError("ranges must be ordered (lo, hi)")
    res = np.arange(re_lo, re_hi + 0.5 * step, step)
    ims = np.arange(im_lo, im_hi + 0.5 * step, step)
    best = math.inf
    argmin = None
    for y in ims:
        for x in res:
            z = complex(x, y)
            if pole_distance(z) < 0.05:
                continue
            mod = abs(gamma(z))
            if mod < best:
                best = mod
                argmin = z
    if argmin is None:
        raise EmptyGridError("no grid point clears the pole-exclusion radius")
    return best, argmin


@dataclass(frozen=True)
class SampleSpec:
    """Sampling region and reproducibility knobs for verify_grid."""

    count: int
    re_range: tuple = (-4.0, 4.0)
    im_range: tuple = (-4.0, 4.0)
    pole_exclusion: float = 0.1
    seed: int = 20260825

    def __post_init__(self):
        if self.count < 1:
            raise DomainError(f"sample count must be >= 1, got {self.count}")
        if not self.re_range[0] <= self.re_range[1]:
            raise DomainError("re_range must be ordered")
        if not self.im_range[0] <= self.im_range[1]:
            raise DomainError("im_range must be ordered")
        if self.pole_exclusion < 0:
            raise DomainError("pole_exclusion must be >= 0")


@dataclass(frozen=True)
class IdentityReport:
    """Aggregated residual statistics for one identity over one sample."""

    identity_id: str
    seed: int
    sample_count: int
    skipped_count: int
    max_relative_residual: float
    mean_relative_residual: float
    worst_point: complex
    tolerance: float
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity_id,
            "seed": self.seed,
            "samples": self.sample_count,
            "skipped": self.skipped_count,
            "max_rel_residual": self.max_relative_residual,
            "mean_rel_residual": self.mean_relative_residual,
            "worst_point": [self.worst_point.real, self.worst_point.imag],
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


def parse_identity_tag(tag: str):
    """Split an identity tag into (kind, parameter).

    Accepted tags: functional, reflection, duplication, comb, mult:N, sine:K,
    cosine:M.  The parameter is None for the parameter-free identities.
    """
    base, sep, arg = tag.partition(":")
    if base in ("functional", "reflection", "duplication", "comb"):
        if sep:
            raise DomainError(f"identity {base!r} takes no parameter")
        return base, None
    if base in ("mult", "sine", "cosine"):
        if not sep:
            raise DomainError(f"identity {base!r} needs a parameter, e.g. {base}:3")
        try:
            n = int(arg)
        except ValueError:
            raise DomainError(f"bad integer parameter {arg!r} in tag {tag!r}") from None
        floor = 0 if base == "cosine" else 1
        if n < floor:
            raise DomainError(f"parameter of {base!r} must be >= {floor}, got {n}")
        return base, n
    raise DomainError(f"unknown identity tag {tag!r}")


def _point_clearance(kind, param, z, radius):
    """True when every gamma/trig argument of the identity clears the radius."""
    if kind == "functional":
        return pole_distance(z) > radius and pole_distance(z + 1.0) > radius
    if kind == "reflection":
        return abs(z - round(z.real)) > radius
    if kind == "duplication":
        return all(
            pole_distance(p) > radius for p in (z, 0.5 * z, 0.5 * z + 0.5)
        )
    if kind == "mult":
        pts = [z] + [(z + j) / param for j in range(param)]
        return all(pole_distance(p) > radius for p in pts)
    if kind == "comb":
        a = z.real
        if not (0.0 < a < 0.25):
            return False
        pts = (4.0 * a, 0.25 - a, 2.0 * a, a + 0.25)
        return all(pole_distance(p) > radius for p in pts)
    # sine and cosine identities are entire: every point is usable
    return True


def _evaluate(kind, param, z):
    if kind == "functional":
        return residual_functional(z)
    if kind == "reflection":
        return residual_reflection(z)
    if kind == "duplication":
        return residual_duplication(z)
    if kind == "mult":
        return residual_multiplication(param, z)
    if kind == "sine":
        return residual_sine_factorization(param, z)
    if kind == "comb":
        return residual_comb(z.real)
    if kind == "cosine":
        return residual_cosine_identity(param, z)
    raise DomainError(f"unknown identity kind {kind!r}")  # pragma: no cover


def verify_grid(identity_id: str, sample_spec: SampleSpec, tolerance: float) -> IdentityReport:
    """Check one identity over a seeded uniform sample of its region.

    Draws sample_spec.count points from the rectangle re_range x im_range.
    Points that violate the pole-exclusion radius, or whose evaluation raises
    a domain/pole error, are counted as skipped rather than failing the run.
    The report is deterministic for a fixed spec (same seed, same bytes).
    """
    if not tolerance > 0:
        raise DomainError(f"tolerance must be > 0, got {tolerance}")
    kind, param = parse_identity_tag(identity_id)
    rng = np.random.default_rng(sample_spec.seed)
    res = rng.uniform(sample_spec.re_range[0], sample_spec.re_range[1], sample_spec.count)
    ims = rng.uniform(sample_spec.im_range[0], sample_spec.im_range[1], sample_spec.count)
    if kind == "comb":
        ims = np.zeros_like(ims)  # the quarter-step relation is real-only

    worst = 0.0
    worst_point = None
    total = 0.0
    used = 0
    skipped = 0
    for x, y in zip(res, ims):
        z = complex(x, y)
        if not _point_clearance(kind, param, z, sample_spec.pole_exclusion):
            skipped += 1
            continue
        try:
            r = _evaluate(kind, param, z)
        except (DomainError, PoleError, OverflowError):
            skipped += 1
            continue
        used += 1
        total += r
        if worst_point is None or r > worst:
            worst = r
            worst_point = z
    if used == 0:
        raise EmptyGridError(
            f"all {sample_spec.count} sampled points for {identity_id!r} were skipped"
        )
    return IdentityReport(
        identity_id=identity_id,
        seed=sample_spec.seed,
        sample_count=used,
        skipped_count=skipped,
        max_relative_residual=worst,
        mean_relative_residual=total / used,
        worst_point=worst_point,
        tolerance=tolerance,
        passed=worst <= tolerance,
    )
