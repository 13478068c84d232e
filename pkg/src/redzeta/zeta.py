"""Reduced zeta functions and the theorem-level consistency checks.

For a basis that is simple and certified nice, the reduced zeta function is
the lattice-point generating function of the ideal or subalgebra cone in the
total degree ``T^{n_1 + ... + n_d}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    LieAlgebra,
    direct_sum,
    height_profile,
    is_nilpotent,
    simple_table,
)
from .cone import (
    ConeSystem,
    build_cone,
    check_funeqid_hypothesis,
    contains,
    interior,
    normalize_variant,
)
from .errors import NotCertifiedError, NotNilpotentError, PrecCycleError, PreconditionError
from .genfun import DEFAULT_TERM_LIMIT, cone_genfun
from .grading import certify_nice, check_mult_hypothesis
from .oracle import enumerate_counts
from .ratfun import (
    FunEqReport,
    RationalFunction,
    detect_functional_equation,
    equals,
    series,
    substitute_inverse,
)


@dataclass(frozen=True)
class ZetaResult:
    algebra: str
    variant: str
    certificate: str  # "certified" | "overridden"
    R: RationalFunction
    cone: ConeSystem
    non_removable: tuple = ()

    @property
    def certified(self) -> bool:
        return self.certificate == "certified"


def reduced_zeta(L: LieAlgebra, variant: str, force: bool = False,
                 limit: int = DEFAULT_TERM_LIMIT) -> ZetaResult:
    """Reduced ideal/subalgebra zeta function of L in its given basis.

    Refuses bases that are not simple, and bases that are not certified nice
    unless ``force`` is set (the result is then marked "overridden").
    """
    variant = normalize_variant(variant)
    table = simple_table(L)
    cert = certify_nice(L)
    if not cert.certified and not force:
        raise NotCertifiedError(cert.non_removable)
    cone = build_cone(table, variant, L.dim)
    R = cone_genfun(cone, limit=limit)
    return ZetaResult(
        algebra=L.name,
        variant=variant,
        certificate="certified" if cert.certified else "overridden",
        R=R,
        cone=cone,
        non_removable=cert.non_removable,
    )


@dataclass(frozen=True)
class MultReport:
    variant: str
    holds: bool
    hypothesis: bool | None  # subalgebra grading hypothesis; None for ideals
    direct: RationalFunction
    product: RationalFunction


def check_multiplicativity(L: LieAlgebra, N: LieAlgebra, variant: str,
                           force: bool = False) -> MultReport:
    """Compare ``R_{L+N}`` with ``R_L * R_N``.

    For subalgebras the comparison runs even when neither summand satisfies
    the grading hypothesis; the report says whether it held.
    """
    variant = normalize_variant(variant)
    S = direct_sum(L, N)
    direct = reduced_zeta(S, variant, force=force).R
    prod = reduced_zeta(L, variant, force=force).R * reduced_zeta(N, variant, force=force).R
    hyp = None
    if variant == "subalgebra":
        hyp = bool(check_mult_hypothesis(L)) or bool(check_mult_hypothesis(N))
    return MultReport(variant, equals(direct, prod), hyp, direct, prod)


@dataclass(frozen=True)
class FunEqCheck:
    variant: str
    d: int
    hypothesis: bool
    predicted: tuple | None  # (epsilon, b)
    detected: FunEqReport
    matches: bool | None
    w: int | None = None
    u: int | None = None
    nilpotency_class: int | None = None
    violations: tuple = ()
    note: str = ""


def check_funeq(L: LieAlgebra, variant: str, force: bool = False) -> FunEqCheck:
    """Predicted ``(epsilon, b)`` versus the functional equation found in R.

    subalgebra: ``(d mod 2, d)``.  ideal: ``(d mod 2, w)`` with ``w`` the
    sum of heights, provided the chain condition on the order holds; for
    class 2 also ``w == d + u``.
    """
    variant = normalize_variant(variant)
    res = reduced_zeta(L, variant, force=force)
    detected = detect_functional_equation(res.R)
    d = L.dim
    if variant == "subalgebra":
        hyp = res.certified
        predicted = (d % 2, d) if hyp else None
        return FunEqCheck(variant, d, hyp, predicted, detected,
                          _match(predicted, detected),
                          note="" if hyp else "outside theorem hypotheses")
    try:
        hp = height_profile(L)
        fh = check_funeqid_hypothesis(L)
    except (NotNilpotentError, PrecCycleError):
        return FunEqCheck(variant, d, False, None, detected, None,
                          note="outside theorem hypotheses: not nilpotent")
    hyp = fh.holds and res.certified
    predicted = (d % 2, hp.w) if hyp else None
    if hyp and hp.nilpotency_class == 2 and hp.w != d + hp.u:
        raise AssertionError(f"class-2 algebra with w={hp.w} != d+u={d + hp.u}")
    return FunEqCheck(
        variant, d, hyp, predicted, detected, _match(predicted, detected),
        w=hp.w, u=hp.u, nilpotency_class=hp.nilpotency_class,
        violations=fh.violations,
        note="" if hyp else "outside theorem hypotheses",
    )


def _match(predicted, detected: FunEqReport):
    if predicted is None:
        return None
    return detected.exists and (detected.epsilon, detected.b) == tuple(predicted)


@dataclass(frozen=True)
class ReciprocityReport:
    variant: str
    holds: bool
    witness: tuple
    closed: RationalFunction
    open: RationalFunction
    series_degree: int | None = None
    series_ok: bool | None = None


def interior_witness(L: LieAlgebra, variant: str, cone: ConeSystem) -> tuple:
    """A lattice point of the open cone: all ones, or the height vector for ideals."""
    variant = normalize_variant(variant)
    inner = interior(cone)
    candidates = [tuple([1] * L.dim)]
    if variant == "ideal" and is_nilpotent(L):
        candidates.insert(0, height_profile(L).heights)
    for c in candidates:
        if contains(inner, c):
            return c
    raise PreconditionError("could not exhibit a lattice point in the open cone")


def check_reciprocity(L: LieAlgebra, variant: str, force: bool = False,
                      series_degree: int | None = None) -> ReciprocityReport:
    """Open-cone series equals ``(-1)^d R(1/T)``, computed independently.

    With ``series_degree`` the open-cone function is also compared with a
    brute-force count of interior lattice points.
    """
    variant = normalize_variant(variant)
    res = reduced_zeta(L, variant, force=force)
    witness = interior_witness(L, variant, res.cone)
    inner = interior(res.cone)
    F_open = cone_genfun(inner)
    sign = -1 if L.dim % 2 else 1
    holds = equals(F_open, substitute_inverse(res.R) * sign)
    series_ok = None
    if series_degree is not None:
        series_ok = [int(c) for c in series(F_open, series_degree)] == enumerate_counts(inner, series_degree)
    return ReciprocityReport(variant, holds, witness, res.R, F_open, series_degree, series_ok)
