"""Diagonal gradings, removable pairs and niceness certificates.

A vector ``l`` in Z^d is a grading when ``x_r -> z^{l_r} x_r`` is an
automorphism for every nonzero ``z``, i.e. ``l_i + l_j = l_k`` whenever the
structure constant ``c_ij^k`` is nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .algebra import LieAlgebra
from .linalg import integer_kernel, rank


@dataclass(frozen=True)
class GradingLattice:
    d: int
    generators: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.generators)


def is_grading(L: LieAlgebra, vec) -> bool:
    return all(sum(a * b for a, b in zip(r, vec)) == 0 for r in grading_constraints(L))


def grading_constraints(L: LieAlgebra) -> list[list[int]]:
    """One row ``e_i + e_j - e_k`` per nonzero structure constant ``c_ij^k``."""
    rows = []
    for (i, j), entries in L.brackets:
        for k, _ in entries:
            r = [0] * L.dim
            r[i] += 1
            r[j] += 1
            r[k] -= 1
            rows.append(r)
    return rows


def grading_lattice(L: LieAlgebra) -> GradingLattice:
    rows = grading_constraints(L)
    if not rows:
        gens = [[int(a == b) for b in range(L.dim)] for a in range(L.dim)]
    else:
        gens = integer_kernel(rows, L.dim)
        assert len(gens) == L.dim - rank(rows)
    return GradingLattice(L.dim, tuple(tuple(g) for g in gens))


def is_removable(G: GradingLattice, i: int, j: int):
    """``(True, witness)`` if some grading separates coordinates i and j, else ``(False, None)``.

    A lattice element with ``l_i != l_j`` exists iff some generator has one.
    """
    for g in G.generators:
        if g[i] != g[j]:
            return True, g
    return False, None


@dataclass(frozen=True)
class NicenessCertificate:
    certified: bool
    witnesses: dict = field(default_factory=dict)  # (i, j) -> grading vector
    non_removable: tuple = ()

    def __bool__(self):
        return self.certified


def certify_nice(L: LieAlgebra, lattice: GradingLattice | None = None) -> NicenessCertificate:
    """Certificate that every pair ``i < j`` is removable.

    A negative answer only means "not certified": removability is sufficient
    for niceness, not known to be necessary.
    """
    G = lattice or grading_lattice(L)
    witnesses, bad = {}, []
    for i, j in combinations(range(L.dim), 2):
        ok, wit = is_removable(G, i, j)
        if ok:
            witnesses[(i, j)] = wit
        else:
            bad.append((i, j))
    return NicenessCertificate(not bad, witnesses, tuple(bad))


@dataclass(frozen=True)
class MultHypothesis:
    holds: bool
    witnesses: tuple  # per coordinate j: grading with l_j != 0, or None

    def __bool__(self):
        return self.holds


def check_mult_hypothesis(L: LieAlgebra, lattice: GradingLattice | None = None) -> MultHypothesis:
    G = lattice or grading_lattice(L)
    wits = []
    for j in range(L.dim):
        wits.append(next((g for g in G.generators if g[j] != 0), None))
    return MultHypothesis(all(w is not None for w in wits), tuple(wits))
