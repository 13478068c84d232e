import itertools
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from redzeta.linalg import hermite_normal_form, in_span, integer_kernel, nullspace, rank, rref


def test_rref_and_rank():
    rows, piv = rref([[2, 4, 6], [1, 2, 4]])
    assert piv == [0, 2]
    assert rows == [[1, 2, 0], [0, 0, 1]]
    assert rank([[1, 2], [2, 4]]) == 1
    assert rref([]) == ([], [])


def test_nullspace():
    basis = nullspace([[1, 1, -1]], 3)
    assert len(basis) == 2
    for v in basis:
        assert v[0] + v[1] - v[2] == 0


def test_in_span():
    assert in_span([[1, 0, 1]], [2, 0, 2])
    assert not in_span([[1, 0, 1]], [0, 1, 0])
    assert in_span([], [0, 0])


def test_hermite_normal_form():
    assert hermite_normal_form([[2, 4], [3, 5]]) == [[1, 1], [0, 2]]
    assert hermite_normal_form([[0, 0]]) == []


def test_integer_kernel_saturated():
    # 2x = y: rational kernel spanned by (1, 2), integer kernel also (1, 2)
    assert integer_kernel([[2, -1]], 2) == [[1, 2]]
    # x + y + z = 0 has rank-2 integer kernel
    K = integer_kernel([[1, 1, 1]], 3)
    assert len(K) == 2


matrices = st.integers(1, 3).flatmap(lambda m: st.integers(2, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_integer_kernel_is_the_full_lattice(A):
    n = len(A[0])
    K = integer_kernel(A, n)
    assert len(K) == n - rank(A)
    for v in K:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)
    # every small integer solution is an integer combination of K
    for x in itertools.product(range(-2, 3), repeat=n):
        if all(sum(a * b for a, b in zip(row, x)) == 0 for row in A) and any(x):
            coeffs = _solve(K, x)
            assert coeffs is not None and all(c.denominator == 1 for c in coeffs)


def _solve(K, x):
    # K is in echelon form with positive pivots
    coeffs = []
    rest = [Fraction(v) for v in x]
    for row in K:
        p = next(i for i, a in enumerate(row) if a)
        c = rest[p] / row[p]
        coeffs.append(c)
        rest = [r - c * a for r, a in zip(rest, row)]
    return coeffs if not any(rest) else None
