import random
from fractions import Fraction

import pytest

from redzeta.algebra import filiform4, free_class2, heisenberg, maximal_class
from redzeta.cone import ConeSystem, algebra_cone, free_orthant, interior
from redzeta.errors import ResourceLimitError
from redzeta.genfun import (
    GFExpression,
    choose_variable,
    cone_genfun,
    crude_gf,
    eliminate_all,
    omega_eliminate,
    to_rational_function,
)
from redzeta.oracle import enumerate_counts
from redzeta.ratfun import RationalFunction, equals, series, substitute_inverse

from conftest import random_simple_algebras

cyc = RationalFunction.cyclotomic_product


def test_crude_gf_heisenberg_ideal():
    E = crude_gf(algebra_cone(heisenberg(), "ideal"))
    # rows: y2 - y3 >= 0 (lambda_0), y1 - y3 >= 0 (lambda_1)
    assert E.active == {0, 1}
    assert E.terms == {((0, 0, 0), ((1, -1, -1), (1, 0, 1), (1, 1, 0))): 1}


def test_crude_gf_orthants():
    E = crude_gf(free_orthant(1))
    assert E.terms == {((0,), ((1,),)): 1}
    E = crude_gf(interior(free_orthant(1)))
    assert E.terms == {((0, -1), ((1, 1),)): 1}


def test_eliminate_one_variable_of_heisenberg():
    E = omega_eliminate(crude_gf(algebra_cone(heisenberg(), "ideal")), 1)
    assert E.active == {0}
    assert E.terms == {((0, 0, 0), ((1, 0, 0), (1, 1, 0), (2, -1, 0))): 1}


def test_open_orthant_elimination():
    E = omega_eliminate(crude_gf(interior(free_orthant(1))), 0)
    assert E.terms == {((0, 0), ((1, 0),)): 1, ((0, 0), ()): -1}
    assert to_rational_function(E) == cyc([0, 1], [1])


def test_negative_only_factor():
    # -y >= 0 on y >= 0 leaves only the origin
    E = GFExpression(1, {((0, 0), ((1, -1),)): Fraction(1)}, frozenset({0}))
    assert to_rational_function(omega_eliminate(E, 0)) == RationalFunction.constant(1)


def test_inactive_variable_rejected():
    E = crude_gf(free_orthant(2))
    with pytest.raises(ValueError):
        omega_eliminate(E, 0)


def test_cone_genfun_examples():
    assert cone_genfun(algebra_cone(heisenberg(), "ideal")) == cyc([1], [1, 1, 3])
    assert cone_genfun(algebra_cone(heisenberg(), "sub")) == cyc([1, 1, 1], [1, 2, 2])
    assert cone_genfun(algebra_cone(free_class2(3), "ideal")) == cyc(
        [1, 0, 0, 2, 0, 2, 0, 0, 1], [1, 1, 1, 3, 5, 6])
    assert cone_genfun(free_orthant(3)) == cyc([1], [1, 1, 1])


def _random_orders(E, count, seed=0):
    rng = random.Random(seed)
    base = sorted(E.active)
    out = [tuple(base), tuple(reversed(base))]
    for _ in range(count):
        rng.shuffle(base)
        out.append(tuple(base))
    return out


@pytest.mark.parametrize("make", [heisenberg, lambda: free_class2(3), lambda: maximal_class(3)])
@pytest.mark.parametrize("variant", ["ideal", "sub"])
def test_elimination_order_independence(make, variant):
    C = algebra_cone(make(), variant)
    for cone in (C, interior(C)):
        ref = cone_genfun(cone)
        for order in _random_orders(crude_gf(cone), 30):
            assert equals(cone_genfun(cone, order=order), ref)


def test_bad_order_rejected():
    C = algebra_cone(heisenberg(), "ideal")
    with pytest.raises(ValueError):
        cone_genfun(C, order=[0])


def test_choose_variable_is_active():
    E = crude_gf(algebra_cone(filiform4(), "sub"))
    assert choose_variable(E) in E.active


def test_resource_limit():
    with pytest.raises(ResourceLimitError):
        cone_genfun(algebra_cone(maximal_class(5), "sub"), limit=3)


def test_series_soundness_builtins(builtins):
    for L in builtins:
        for v in ("ideal", "sub"):
            C = algebra_cone(L, v)
            for cone in (C, interior(C)):
                R = cone_genfun(cone)
                assert series(R, 12) == enumerate_counts(cone, 12), (L.name, v)


def test_interior_has_zero_constant_term(random_algebras):
    for L in random_algebras[:30]:
        for v in ("ideal", "sub"):
            assert series(cone_genfun(interior(algebra_cone(L, v))), 0) == [0]


def test_reciprocity_on_random_cones():
    for L in random_simple_algebras(30, seed=123):
        for v in ("ideal", "sub"):
            C = algebra_cone(L, v)
            closed, inner = cone_genfun(C), cone_genfun(interior(C))
            if series(inner, 3 * L.dim) == [0] * (3 * L.dim + 1):
                continue  # empty interior
            sign = -1 if L.dim % 2 else 1
            assert equals(inner, substitute_inverse(closed) * sign), (L.brackets, v)


def test_generic_cone_with_chain():
    # y0 >= y1 >= y2: partitions into at most 3 parts
    C = ConeSystem.make(3, [((1, -1, 0), 0), ((0, 1, -1), 0)])
    assert cone_genfun(C) == cyc([1], [1, 2, 3])
