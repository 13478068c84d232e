"""Brute-force cross-checks that share no code with the Omega elimination.

Only the ``ConeSystem`` value type is shared; membership is re-derived here.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import SimpleBracketTable
from .cone import ConeSystem, normalize_variant
from .ratfun import RationalFunction, series


def _vectors_of_total(d, m):
    """All nonnegative integer d-vectors with entries summing to m."""
    if d == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in _vectors_of_total(d - 1, m - first):
            yield (first,) + rest


def _member(C: ConeSystem, n) -> bool:
    for i, s in enumerate(C.axis_strict):
        if n[i] < s:
            return False
    for q, s in C.constraints:
        if sum(q[i] * n[i] for i in range(C.d)) < s:
            return False
    return True


def enumerate_counts(C: ConeSystem, M: int) -> list[int]:
    """Number of lattice points of C with coordinate sum m, for m = 0..M."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    return [sum(1 for n in _vectors_of_total(C.d, m) if _member(C, n)) for m in range(M + 1)]


def diagonal_condition(T: SimpleBracketTable, n, variant: str) -> bool:
    """Whether ``span{t^{n_i} x_i}`` is an ideal / subalgebra, read off the bracket table."""
    variant = normalize_variant(variant)
    if any(x < 0 for x in n):
        raise ValueError("exponent vector must be nonnegative")
    for (i, j), (l, _a) in T.items():
        if variant == "ideal":
            if n[l] > n[i] or n[l] > n[j]:
                return False
        elif n[l] > n[i] + n[j]:
            return False
    return True


def series_check(R: RationalFunction, C: ConeSystem, M: int) -> bool:
    return series(R, M) == [Fraction(c) for c in enumerate_counts(C, M)]
