"""Reduced zeta functions of Lie algebras with a nice and simple basis."""

from .algebra import (
    LieAlgebra,
    SimpleBracketTable,
    builtin,
    direct_sum,
    height_profile,
    power,
    quotient_by_basis_subset,
    simple_table,
    validate,
)
from .cone import ConeSystem, build_cone, interior
from .genfun import cone_genfun
from .grading import certify_nice, grading_lattice
from .ratfun import Polynomial, RationalFunction, display_factored
from .zeta import check_funeq, check_multiplicativity, check_reciprocity, reduced_zeta

__version__ = "0.1.0"
