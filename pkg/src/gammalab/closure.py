"""Finite affine closures of rational point sets under the gamma identities.

Each identity relates Gamma at an argument x to Gamma at finitely many
affinely-transformed arguments: the recurrence links x to x +- 1, the
reflection to 1 - x, and the n-fold multiplication formula links any of
its n + 1 argument slots to the others (x/n + j/n and n x - j for the
product slots against the nx slot, x + d/n between product slots).  The
closure of a finite set under finitely many affine maps stays finite —
and so of measure zero — which is what makes small fundamental sets
possible; this module makes the growth bound |S| * K**depth concrete.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, ResourceError
from .intervals import as_fraction

DEFAULT_CARDINALITY_BUDGET = 100_000


def generating_maps(max_n: int) -> list:
    """Affine maps (p, q) meaning x -> p*x + q, excluding the identity.

    Always includes x+1, x-1, 1-x; for each n = 2..max_n adds the n-fold
    multiplication maps: x/n + j/n (j = 0..n-1), n*x - j (j = 0..n-1),
    and x + d/n (d = +-1..+-(n-1)).
    """
    if max_n < 1:
        raise DomainError(f"max_n must be >= 1, got {max_n}")
    maps = [
        (Fraction(1), Fraction(1)),
        (Fraction(1), Fraction(-1)),
        (Fraction(-1), Fraction(1)),
    ]
    for n in range(2, max_n + 1):
        for j in range(n):
            maps.append((Fraction(1, n), Fraction(j, n)))
            maps.append((Fraction(n), Fraction(-j)))
        for d in range(1, n):
            maps.append((Fraction(1), Fraction(d, n)))
            maps.append((Fraction(1), Fraction(-d, n)))
    return maps


def branching_factor(max_n: int) -> int:
    """K = 1 + number of generating maps (the 1 counts the identity)."""
    return 1 + len(generating_maps(max_n))


def affine_closure(points, depth: int, max_n: int,
                   *, budget: int = DEFAULT_CARDINALITY_BUDGET) -> frozenset:
    """Depth-step closure of `points` under the identity maps, in (0, inf).

    Images outside (0, inf) are discarded (gamma arguments stay positive
    here); the identity map is implicit, so the input is contained in the
    output and |output| <= |points| * K**depth with K = branching_factor.
    Raises ResourceError when the set exceeds `budget` elements.
    """
    if depth < 0:
        raise DomainError(f"depth must be >= 0, got {depth}")
    pts = set()
    for p in points:
        p = as_fraction(p)
        if not p > 0:
            raise DomainError(f"points must be positive, got {p}")
        pts.add(p)
    maps = generating_maps(max_n)
    frontier = set(pts)
    for _ in range(depth):
        new = set()
        for x in frontier:
            for a, b in maps:
                y = a * x + b
                if y > 0 and y not in pts:
                    new.add(y)
        pts |= new
        if len(pts) > budget:
            raise ResourceError(
                f"closure exceeded the cardinality budget {budget}"
            )
        if not new:
            break
        frontier = new
    return frozenset(pts)
