"""Double-exponential (tanh-sinh) quadrature and the integral oracles.

The engine is deliberately self-contained: a tanh-sinh node ladder on a finite
interval, plus a logarithmic substitution for half-line integrals with the
truncation window grown until the endpoint integrand magnitude falls below the
tolerance times the running value.  It serves as the independent oracle for
the defining gamma integral and the beta integral representation.
"""

import cmath
import math
from dataclasses import dataclass

from .core import _check_finite
from .errors import ConvergenceError, DomainError

__all__ = [
    "QuadratureSpec",
    "tanh_sinh",
    "integrate_halfline",
    "integrate_real_line",
    "quadrature",
    "beta_integral",
    "gamma_integral",
]

_T_CUT = 6.0          # |t| beyond this the DE weight underflows double precision
_BASE_H = 0.5
_TINY_WEIGHT = 1e-280


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerance/budget/domain bundle for the quadrature oracle."""

    relative_tolerance: float = 1e-10
    max_refinement_levels: int = 12
    domain: str = "halfline"  # "unit" or "halfline"

    def __post_init__(self):
        if not self.relative_tolerance > 0:
            raise DomainError("relative_tolerance must be > 0")
        if self.max_refinement_levels < 1:
            raise DomainError("max_refinement_levels must be >= 1")
        if self.domain not in ("unit", "halfline"):
            raise DomainError(f"unknown quadrature domain {self.domain!r}")


def _de_node(t, a, b, half):
    """Abscissa and weight of the tanh-sinh map on (a, b), a = mid - half.

    The abscissa is assembled from the nearer endpoint so that points
    double-exponentially close to a or b keep full relative accuracy
    (1 +- tanh(u) is evaluated as 2/(1+exp(-+2u)), not by cancellation).
    """
    u = 0.5 * math.pi * math.sinh(t)
    if abs(u) > 350.0:
        return None, 0.0
    ch = math.cosh(u)
    if u >= 0.0:
        x = b - half * 2.0 / (1.0 + math.exp(2.0 * u))
    else:
        x = a + half * 2.0 / (1.0 + math.exp(-2.0 * u))
    w = half * 0.5 * math.pi * math.cosh(t) / (ch * ch)
    return x, w


def _level_sum(f, a, b, half, h, only_odd):
    total = 0.0
    j = 1 if only_odd else 0
    step = 2 if only_odd else 1
    while j * h <= _T_CUT:
        for t in (j * h, -j * h) if j else (0.0,):
            x, w = _de_node(t, a, b, half)
            if x is None or w == 0.0:
                continue
            if not (a < x < b):
                continue
            val = f(x)
            if isinstance(val, complex):
                if not (math.isfinite(val.real) and math.isfinite(val.imag)):
                    if w < _TINY_WEIGHT:
                        continue
                    raise ConvergenceError(
                        f"integrand not finite at x={x!r} with non-negligible weight"
                    )
            elif not math.isfinite(val):
                if w < _TINY_WEIGHT:
                    continue
                raise ConvergenceError(
                    f"integrand not finite at x={x!r} with non-negligible weight"
                )
            total += w * val
        j += step
    return total


def tanh_sinh(f, a, b, *, rtol=1e-10, max_levels=12):
    """Integrate f over (a, b) with the double-exponential transformation.

    Returns (value, error_estimate) with |error_estimate| <= rtol*|value| on
    success; raises ConvergenceError when the level budget runs out.
    Endpoint singularities of integrable type are fine - the nodes never touch
    a or b and the weights decay double-exponentially.
    """
    if not (a < b):
        raise DomainError(f"bad interval ({a!r}, {b!r})")
    half = 0.5 * (b - a)
    h = _BASE_H
    value = h * _level_sum(f, a, b, half, h, only_odd=False)
    prev = None
    for _ in range(max_levels):
        h *= 0.5
        value = 0.5 * value + h * _level_sum(f, a, b, half, h, only_odd=True)
        if prev is not None:
            err = abs(value - prev)
            scale = max(abs(value), 1e-300)
            if err <= rtol * scale:
                return value, err
        prev = value
    raise ConvergenceError(
        f"tanh-sinh failed to reach rtol={rtol} within {max_levels} levels"
    )


def integrate_halfline(f, *, rtol=1e-10, max_levels=12, u_cap=4000.0):
    """Integrate f over (0, inf) via s = exp(u) and truncated tanh-sinh.

    The truncation window [-U1, U2] grows until |f(e^u) e^u| at both endpoints
    drops below rtol times the coarse value; a window that never satisfies the
    bound (non-decaying tail) raises ConvergenceError.
    """

    def g(u):
        if u > 709.0:
            # the tail is still significant where e^u no longer fits a double:
            # the substitution cannot represent this integrand
            raise ConvergenceError(
                "half-line tail has not decayed within the double range; "
                "integrate in log space instead"
            )
        s = math.exp(u)
        return f(s) * s

    lo, hi = _window(g, rtol, u_cap=u_cap)
    return tanh_sinh(g, lo, hi, rtol=rtol, max_levels=max_levels)


def quadrature(integrand, spec):
    """Public oracle entry: integrate a real function per the QuadratureSpec.

    Returns (value, error_estimate).
    """
    if spec.domain == "unit":
        return tanh_sinh(
            integrand, 0.0, 1.0,
            rtol=spec.relative_tolerance, max_levels=spec.max_refinement_levels,
        )
    return integrate_halfline(
        integrand,
        rtol=spec.relative_tolerance, max_levels=spec.max_refinement_levels,
    )


def _exp_or_zero(arg):
    """exp for complex arguments that underflows to 0 instead of overflowing range."""
    if arg.real < -745.0:
        return 0.0j
    return cmath.exp(arg)


def beta_integral(z, w, spec):
    """Beta function via its half-line integral representation.

    Integrates s^{z-1} (1+s)^{-z-w} over (0, inf) after the log substitution.
    Requires Re z > 0 and Re w > 0.
    """
    zc = _check_finite(z, "z")
    wc = _check_finite(w, "w")
    if zc.real <= 0 or wc.real <= 0:
        raise DomainError("beta_integral requires Re z > 0 and Re w > 0")
    zw = zc + wc

    def g(u):
        # integrand in u-space: exp(z u - (z+w) log(1+e^u))
        if u > 700.0:
            l1p = u
        else:
            l1p = math.log1p(math.exp(u))
        return _exp_or_zero(zc * u - zw * l1p)

    value, _ = tanh_sinh(
        g,
        *_window(g, spec.relative_tolerance),
        rtol=spec.relative_tolerance,
        max_levels=spec.max_refinement_levels,
    )
    if isinstance(z, complex) or isinstance(w, complex):
        return value
    return value.real


def gamma_integral(z, spec):
    """The defining gamma integral, evaluated numerically (oracle for gamma)."""
    zc = _check_finite(z, "z")
    if zc.real <= 0:
        raise DomainError("gamma_integral requires Re z > 0")

    def g(u):
        if u > 700.0:
            return 0.0j
        return _exp_or_zero(zc * u - math.exp(u))

    value, _ = tanh_sinh(
        g,
        *_window(g, spec.relative_tolerance),
        rtol=spec.relative_tolerance,
        max_levels=spec.max_refinement_levels,
    )
    if isinstance(z, complex):
        return value
    return value.real


def integrate_real_line(g, *, rtol=1e-10, max_levels=12, u_cap=4000.0):
    """Integrate g over the whole real line with adaptive truncation.

    Meant for already-substituted integrands (x = e^u and the like) whose
    tails decay exponentially; the window [-U1, U2] grows until |g| at both
    ends drops below tolerance, then tanh-sinh runs on it.  Returns
    (value, error_estimate); ConvergenceError when a tail never decays
    within u_cap.
    """
    lo, hi = _window(g, rtol, u_cap=u_cap)
    return tanh_sinh(g, lo, hi, rtol=rtol, max_levels=max_levels)


def _window(g, rtol, u_cap=4000.0):
    """Truncation window on the u-line for an already-substituted integrand."""
    u1 = u2 = 8.0
    try:
        coarse, _ = tanh_sinh(g, -u1, u2, rtol=1e-3, max_levels=8)
    except ConvergenceError:
        coarse = 0.0
    threshold = rtol * max(abs(coarse), 1e-300) * 1e-2
    while abs(g(-u1)) > threshold:
        u1 *= 1.4
        if u1 > u_cap:
            raise ConvergenceError("integrand tail near 0 does not decay below tolerance")
    while abs(g(u2)) > threshold:
        u2 *= 1.4
        if u2 > u_cap:
            raise ConvergenceError("integrand tail at infinity does not decay below tolerance")
    return -u1, u2
