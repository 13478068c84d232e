import random

from redzeta.algebra import heisenberg, simple_table
from redzeta.cone import algebra_cone, contains, free_orthant, interior
from redzeta.genfun import cone_genfun
from redzeta.oracle import diagonal_condition, enumerate_counts, series_check
from redzeta.ratfun import RationalFunction


def test_enumerate_counts_examples():
    H = heisenberg()
    assert enumerate_counts(algebra_cone(H, "ideal"), 3) == [1, 2, 3, 5]
    assert enumerate_counts(free_orthant(1), 4) == [1] * 5
    assert enumerate_counts(algebra_cone(H, "sub"), 2) == [1, 2, 5]


def test_enumerate_counts_is_prefix_stable():
    C = interior(algebra_cone(heisenberg(), "sub"))
    assert enumerate_counts(C, 10)[:6] == enumerate_counts(C, 5)


def test_diagonal_condition_examples():
    T = simple_table(heisenberg())
    assert diagonal_condition(T, (1, 1, 1), "ideal")
    assert not diagonal_condition(T, (0, 0, 1), "ideal")
    assert diagonal_condition(T, (0, 1, 1), "sub")


def test_series_check_examples():
    H = heisenberg()
    R = cone_genfun(algebra_cone(H, "ideal"))
    assert series_check(R, algebra_cone(H, "ideal"), 12)
    assert not series_check(R, algebra_cone(H, "sub"), 2)
    for d in range(1, 5):
        assert series_check(RationalFunction.cyclotomic_product([1], [1] * d), free_orthant(d), 8)


def test_diagonal_condition_agrees_with_cones(builtins, random_algebras):
    rng = random.Random(17)
    for L in builtins + random_algebras[:20]:
        T = simple_table(L)
        for v in ("ideal", "sub"):
            C = algebra_cone(L, v)
            for _ in range(1000):
                n = tuple(rng.randint(0, 5) for _ in range(L.dim))
                assert diagonal_condition(T, n, v) == contains(C, n)
