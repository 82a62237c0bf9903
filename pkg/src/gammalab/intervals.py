"""Sorted disjoint unions of half-open rational intervals (a, b].

Endpoints are exact fractions, so measures and membership tests are exact
integer arithmetic — the set constructions downstream turn on exact
comparisons like measure < delta, never floating tests.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .errors import DomainError


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions, floats, and 'p/q' strings to an exact Fraction.

    Floats convert exactly (they are dyadic rationals), which keeps trace
    bookkeeping honest when arguments arrive as doubles.
    """
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse rational {x!r}: {exc}") from None
    raise DomainError(f"cannot interpret {x!r} as a rational")


@dataclass(frozen=True)
class IntervalSet:
    """Immutable union of half-open intervals (a, b] with Fraction endpoints.

    The constructor accepts intervals in any order, possibly overlapping or
    touching, and normalizes to the canonical sorted disjoint form; (a, b]
    and (b, c] merge into (a, c].
    """

    intervals: tuple = field(default=())

    def __init__(self, pairs=()):
        cleaned = []
        for lo, hi in pairs:
            lo = as_fraction(lo)
            hi = as_fraction(hi)
            if not lo < hi:
                raise DomainError(f"empty or inverted interval ({lo}, {hi}]")
            cleaned.append((lo, hi))
        cleaned.sort()
        merged = []
        for lo, hi in cleaned:
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        object.__setattr__(self, "intervals", tuple(merged))

    @property
    def measure(self) -> Fraction:
        return sum((hi - lo for lo, hi in self.intervals), Fraction(0))

    def __contains__(self, x) -> bool:
        x = as_fraction(x)
        # rightmost interval with lo < x
        idx = bisect_left(self.intervals, (x, Fraction(0))) - 1
        if idx < 0:
            # x could still equal the first lo (excluded) or fall before it
            return False
        lo, hi = self.intervals[idx]
        return lo < x <= hi

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.intervals + other.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def __bool__(self):
        return bool(self.intervals)
