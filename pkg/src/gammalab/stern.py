"""Counting independent linear relations among log-gamma values.

For a modulus m, the values v_k = log Gamma(k/m), k = 1..m-1, satisfy two
families of integer linear relations modulo the span of {1, log pi, log 2,
..., log m}: reflection pairs v_k + v_{m-k} = const, and for every divisor
n >= 2 of m the multiplication relation sum_j v_{k + j m/n} - v_{nk} =
const.  Writing all of them as rows of an integer matrix and computing its
rank over the rationals yields the number of *independent* values left,
which equals phi(m)/2 (phi the totient) for every m >= 3.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DomainError


def totient(m: int) -> int:
    """Euler's totient by direct gcd counting (m is small here)."""
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def relation_matrix(m: int) -> list:
    """Integer relation rows over the unknowns v_1..v_{m-1}.

    Reflection supplies rows for k = 1..floor(m/2): e_k + e_{m-k} (a single
    2 e_k when k = m - k).  Each divisor n >= 2 of m supplies rows for
    k = 1..m/n: sum_{j=0}^{n-1} e_{k + j m/n} - e_{nk}, with the v_m term
    (which is 0 = log Gamma(1) up to constants) simply dropped.
    """
    if m < 3:
        raise DomainError(
            "relation counting needs m >= 3; at m = 2 the only value "
            "v_1 = log Gamma(1/2) is itself constant and the count "
            "phi(m)/2 does not apply"
        )
    rows = []
    for k in range(1, m // 2 + 1):
        row = [0] * (m - 1)
        row[k - 1] += 1
        row[m - k - 1] += 1
        rows.append(row)
    for n in range(2, m + 1):
        if m % n != 0:
            continue
        step = m // n
        for k in range(1, step + 1):
            row = [0] * (m - 1)
            for j in range(n):
                idx = k + j * step
                if idx != m:
                    row[idx - 1] += 1
            if n * k != m:
                row[n * k - 1] -= 1
            rows.append(row)
    return rows


def _rank(rows: list) -> int:
    """Rank over Q by fraction-free elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        for i in range(r + 1, len(mat)):
            if mat[i][c] != 0:
                factor = mat[i][c] / inv
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        r += 1
        rank += 1
        if r == len(mat):
            break
    return rank


def independent_count(m: int) -> int:
    """Number of log-gamma values at k/m not fixed by the relation families.

    Computed as (m - 1) - rank(relation matrix); equals totient(m)/2 for
    every m >= 3, which is asserted.
    """
    rows = relation_matrix(m)
    independent = (m - 1) - _rank(rows)
    expected, rem = divmod(totient(m), 2)
    assert rem == 0 and independent == expected, (m, independent, totient(m))
    return independent
