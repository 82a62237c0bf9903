"""Master-theorem checks: Mellin transforms of alternating power series.

If phi is analytic and suitably bounded, the function

    psi(x) = sum_{n>=0} (-x)**n phi(n)

continues past its convergence disc and its Mellin transform evaluates in
closed form:

    integral_0^inf x**(s-1) psi(x) dx = pi / sin(pi s) * phi(-s),

for s in the strip (0, eta).  This module ships a small catalog of phi
with known closed-form psi, evaluates both sides numerically, and reports
the relative residual.  phi = 1 recovers the reflection-formula values.

The transform is integrated after x = e^u.  Near the strip edges the
integrand decays like exp(-c|u|) with tiny c, so the truncation window
reaches far beyond where e^u is a representable float; each catalog entry
therefore supplies log(psi(e^u)) in a form stable for all u, and the
integrand is assembled in log space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .quadrature import QuadratureSpec, integrate_halfline, integrate_real_line


def _exp_floor(arg: float) -> float:
    """exp with hard underflow to 0 instead of a range error."""
    if arg < -745.0:
        return 0.0
    return math.exp(arg)


@dataclass(frozen=True)
class PhiSpec:
    """A catalog entry: the sequence phi, its closed-form psi, and the
    growth/strip constants.

    eta is the half-width of the admissible strip 0 < s < eta; q bounds
    the growth |phi(n)| <= C * exp(q n) and so the convergence radius
    exp(-q) of the series; r in (0, pi) and C complete the hypothesis but
    play no computational role.  log_psi_of_exp(u) = log(psi(e^u)),
    computed stably for all u, powers the transform; entries without it
    fall back to integration in x, which only works while the tail dies
    before e^u overflows.
    """

    id: str
    phi: object
    psi_closed_form: object
    eta: float
    q: float = 0.0
    r: float = field(default=math.pi / 2)
    C: float = 1.0
    log_psi_of_exp: object = None


def _psi_one(x):
    return 1.0 / (1.0 + x)


def _log_psi_one(u):
    # -log(1 + e^u), written from the dominant side
    if u > 0.0:
        return -(u + math.log1p(_exp_floor(-u)))
    return -math.log1p(_exp_floor(u))


def _psi_exp(x):
    return math.exp(-x)


def _log_psi_exp(u):
    if u > 700.0:
        return -math.inf
    return -math.exp(u)


def _psi_log1p(x):
    return math.log1p(x) / x


def _log_psi_log1p(u):
    # log(log(1 + e^u)) - u; for very negative u, psi(e^u) -> 1 - e^u/2
    if u < -35.0:
        return -0.5 * math.exp(u)
    if u > 0.0:
        return math.log(u + math.log1p(_exp_floor(-u))) - u
    return math.log(math.log1p(math.exp(u))) - u


def _geom_spec(a: float) -> PhiSpec:
    if not a > 0:
        raise DomainError(f"geometric ratio must be > 0, got {a}")
    la = math.log(a)

    def log_psi(u, la=la):
        # -log(1 + a e^u) = shifted copy of the phi=1 case
        return _log_psi_one(u + la)

    return PhiSpec(
        id=f"geom:{a:g}",
        phi=lambda n: a**n,
        psi_closed_form=lambda x, a=a: 1.0 / (1.0 + a * x),
        eta=1.0,
        q=la,
        log_psi_of_exp=log_psi,
    )


_CATALOG = {
    "one": lambda: PhiSpec(
        id="one",
        phi=lambda n: 1.0,
        psi_closed_form=_psi_one,
        eta=1.0,
        log_psi_of_exp=_log_psi_one,
    ),
    "exp": lambda: PhiSpec(
        id="exp",
        phi=lambda n: 1.0 / math.gamma(n + 1),
        psi_closed_form=_psi_exp,
        eta=math.inf,
        log_psi_of_exp=_log_psi_exp,
    ),
    "log1p": lambda: PhiSpec(
        id="log1p",
        phi=lambda n: 1.0 / (n + 1),
        psi_closed_form=_psi_log1p,
        eta=1.0,
        log_psi_of_exp=_log_psi_log1p,
    ),
}


def catalog_ids() -> list:
    return ["one", "geom:a", "exp", "log1p"]


def catalog_entry(tag: str) -> PhiSpec:
    """Look up a PhiSpec by id; "geom:a" takes a numeric ratio, e.g. geom:2."""
    if tag in _CATALOG:
        return _CATALOG[tag]()
    if tag.startswith("geom:"):
        try:
            a = float(tag.split(":", 1)[1])
        except ValueError:
            raise DomainError(f"bad geometric ratio in {tag!r}") from None
        return _geom_spec(a)
    raise DomainError(
        f"unknown phi id {tag!r}; known: {', '.join(catalog_ids())}"
    )


def psi_eval(spec: PhiSpec, x: float) -> float:
    """psi(x): the alternating series inside 0.9 * exp(-q), the closed
    form beyond (the series itself would diverge past exp(-q))."""
    x = float(x)
    if not x > 0:
        raise DomainError(f"x must be > 0, got {x}")
    if x >= 0.9 * math.exp(-spec.q):
        return spec.psi_closed_form(x)
    total = 0.0
    term_x = 1.0
    for n in range(0, 10_000):
        term = term_x * spec.phi(n)
        total += term
        if abs(term) <= 1e-16 * max(abs(total), 1.0) and n > 3:
            return total
        term_x *= -x
    return total


def mellin_transform(spec: PhiSpec, s: float, q_spec: QuadratureSpec | None = None) -> float:
    """integral_0^inf x**(s-1) psi(x) dx for 0 < s < eta.

    With x = e^u this is integral exp(s*u + log psi(e^u)) du over the whole
    line, truncated where the integrand drops below tolerance.  A tail that
    never decays (s at or outside the admissible strip) raises
    ConvergenceError.
    """
    s = float(s)
    if not (0.0 < s < spec.eta):
        raise DomainError(
            f"s must lie in the strip (0, {spec.eta}), got {s}"
        )
    if q_spec is None:
        q_spec = QuadratureSpec(relative_tolerance=1e-9)
    if spec.log_psi_of_exp is not None:
        log_psi = spec.log_psi_of_exp

        def g(u):
            return _exp_floor(s * u + log_psi(u))

        value, _err = integrate_real_line(
            g,
            rtol=q_spec.relative_tolerance,
            max_levels=q_spec.max_refinement_levels,
        )
        return value

    def integrand(x):
        return x ** (s - 1.0) * spec.psi_closed_form(x)

    value, _err = integrate_halfline(
        integrand,
        rtol=q_spec.relative_tolerance,
        max_levels=q_spec.max_refinement_levels,
    )
    return value


def rmt_closed_form(spec: PhiSpec, s: float) -> float:
    """The predicted transform pi/sin(pi s) * phi(-s)."""
    return math.pi / math.sin(math.pi * s) * spec.phi(-s)


def rmt_residual(spec: PhiSpec, s: float) -> float:
    """Relative residual between the numerical transform and the closed form.

    s must be non-integral so phi(-s) and sin(pi s) are unambiguous.
    """
    s = float(s)
    if s == int(s):
        raise DomainError(f"s must not be an integer, got {s}")
    lhs = mellin_transform(spec, s)
    rhs = rmt_closed_form(spec, s)
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs))
