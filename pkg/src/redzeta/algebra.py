"""Lie algebras given by sparse rational structure constants.

Basis vectors are indexed from 0.  Only brackets ``[x_i, x_j]`` with
``i < j`` are stored; the rest follow from antisymmetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .errors import (
    MalformedAlgebraError,
    NotNilpotentError,
    NotSimpleError,
    UnsupportedQuotientError,
)
from .linalg import in_span, nullspace, rref


def _freeze_brackets(brackets, d):
    frozen = []
    for key, vec in brackets.items():
        try:
            i, j = key
        except (TypeError, ValueError):
            raise MalformedAlgebraError(f"bracket key {key!r} is not a pair") from None
        if not (0 <= i < d and 0 <= j < d):
            raise MalformedAlgebraError(f"bracket index out of range in {key!r} (dim {d})")
        if i >= j:
            raise MalformedAlgebraError(f"bracket {key!r} must be given with i < j")
        entries = []
        for l, c in sorted(vec.items()):
            if not 0 <= l < d:
                raise MalformedAlgebraError(f"target index {l} out of range in bracket {key!r}")
            c = Fraction(c)
            if c != 0:
                entries.append((l, c))
        if entries:
            frozen.append(((i, j), tuple(entries)))
    return tuple(sorted(frozen))


@dataclass(frozen=True)
class LieAlgebra:
    """Finite-dimensional Lie algebra over Q in a fixed basis.

    ``brackets`` maps ``(i, j)`` with ``i < j`` to ``{l: c}`` meaning
    ``[x_i, x_j] = sum_l c x_l``.  The constructor accepts any mapping and
    stores a canonical, hashable form.
    """

    basis: tuple[str, ...]
    brackets: tuple = ()
    name: str = "L"

    def __init__(self, basis, brackets: Mapping | tuple = (), name: str = "L"):
        basis = tuple(str(b) for b in basis)
        if not basis:
            raise MalformedAlgebraError("dimension must be at least 1")
        if len(set(basis)) != len(basis):
            dup = sorted({b for b in basis if basis.count(b) > 1})
            raise MalformedAlgebraError(f"duplicate basis names: {dup}")
        if isinstance(brackets, tuple):
            brackets = {k: dict(v) for k, v in brackets}
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "brackets", _freeze_brackets(brackets, len(basis)))
        object.__setattr__(self, "name", name)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """``[x_i, x_j]`` as a sparse vector."""
        if i == j:
            return {}
        if i < j:
            return dict(self._table.get((i, j), ()))
        return {l: -c for l, c in self._table.get((j, i), ())}

    @property
    def _table(self):
        t = self.__dict__.get("_table_cache")
        if t is None:
            t = dict(self.brackets)
            object.__setattr__(self, "_table_cache", t)
        return t

    def bracket_vectors(self, u, v) -> list[Fraction]:
        """Bracket of two dense coordinate vectors."""
        out = [Fraction(0)] * self.dim
        for (i, j), entries in self.brackets:
            coef = u[i] * v[j] - u[j] * v[i]
            if coef:
                for l, c in entries:
                    out[l] += coef * c
        return out

    def ad_matrix(self, j: int) -> list[list[Fraction]]:
        """Matrix of ``v -> [v, x_j]`` acting on column vectors."""
        d = self.dim
        m = [[Fraction(0)] * d for _ in range(d)]
        for i in range(d):
            for l, c in self.bracket(i, j).items():
                m[l][i] = c
        return m

    def index(self, name: str) -> int:
        try:
            return self.basis.index(name)
        except ValueError:
            raise MalformedAlgebraError(f"unknown basis name {name!r}") from None

    def __repr__(self):
        return f"LieAlgebra(name={self.name!r}, dim={self.dim})"


# --- validation -----------------------------------------------------------

@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    failures: tuple = ()  # ((i, j, k), {l: defect})


def _bracket_sparse(L, u: dict, v: dict) -> dict:
    out: dict[int, Fraction] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            for l, c in L.bracket(a, b).items():
                out[l] = out.get(l, 0) + ca * cb * c
    return {l: c for l, c in out.items() if c != 0}


def jacobi_defect(L: LieAlgebra, i: int, j: int, k: int) -> dict[int, Fraction]:
    """``[x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]]`` as a sparse vector."""
    total: dict[int, Fraction] = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        for l, coef in _bracket_sparse(L, {a: Fraction(1)}, L.bracket(b, c)).items():
            total[l] = total.get(l, 0) + coef
    return {l: c for l, c in sorted(total.items()) if c != 0}


def validate(L: LieAlgebra) -> JacobiReport:
    failures = []
    for i, j, k in combinations(range(L.dim), 3):
        defect = jacobi_defect(L, i, j, k)
        if defect:
            failures.append(((i, j, k), defect))
    return JacobiReport(ok=not failures, failures=tuple(failures))


# --- simple bases ---------------------------------------------------------

@dataclass(frozen=True)
class SimpleBracketTable:
    """Brackets of a simple basis: ``(i, j) -> (l, a)`` with ``a != 0``."""

    dim: int
    entries: tuple = ()  # (((i, j), (l, a)), ...) sorted

    def items(self):
        return iter(self.entries)

    def as_dict(self):
        return dict(self.entries)

    def __len__(self):
        return len(self.entries)


def simple_table(L: LieAlgebra) -> SimpleBracketTable:
    """Raise ``NotSimpleError`` listing offending pairs if the basis is not simple."""
    bad = [pair for pair, entries in L.brackets if len(entries) > 1]
    if bad:
        raise NotSimpleError(bad)
    return SimpleBracketTable(L.dim, tuple((pair, entries[0]) for pair, entries in L.brackets))


def is_simple(L: LieAlgebra) -> bool:
    return all(len(entries) == 1 for _, entries in L.brackets)


# --- upper central series -------------------------------------------------

@dataclass(frozen=True)
class HeightProfile:
    heights: tuple[int, ...]
    nilpotency_class: int
    w: int
    u: int
    series_dims: tuple[int, ...] = ()


def _annihilator(subspace_rows, d):
    if not subspace_rows:
        return [[Fraction(int(a == b)) for b in range(d)] for a in range(d)]
    return nullspace(subspace_rows, d)


def upper_central_series(L: LieAlgebra) -> list[list[list[Fraction]]]:
    """Bases of ``Z_1, Z_2, ...`` up to the point the series stabilises."""
    d = L.dim
    ads = [L.ad_matrix(j) for j in range(d)]
    series = []
    current: list = []
    while True:
        ann = _annihilator(current, d)
        # v in Z_{i+1}  iff  phi([v, x_j]) = 0 for every phi annihilating Z_i.
        conditions = []
        for m in ads:
            for phi in ann:
                row = [sum(phi[r] * m[r][c] for r in range(d)) for c in range(d)]
                if any(row):
                    conditions.append(row)
        nxt = nullspace(conditions, d) if conditions else [
            [Fraction(int(a == b)) for b in range(d)] for a in range(d)]
        nxt, _ = rref(nxt)
        if len(nxt) == len(current):
            return series
        series.append(nxt)
        current = nxt
        if len(current) == d:
            return series


def center(L: LieAlgebra) -> list[list[Fraction]]:
    series = upper_central_series(L)
    if not series:
        return []
    return series[0]


def height_profile(L: LieAlgebra) -> HeightProfile:
    d = L.dim
    series = upper_central_series(L)
    if not series or len(series[-1]) < d:
        reached = len(series[-1]) if series else 0
        raise NotNilpotentError(
            f"upper central series of {L.name} stabilises at dimension {reached} < {d}")
    heights = []
    for k in range(d):
        e = [Fraction(int(t == k)) for t in range(d)]
        r = next(r for r, z in enumerate(series, start=1) if in_span(z, e))
        heights.append(r)
    u = d - len(series[0])
    return HeightProfile(
        heights=tuple(heights),
        nilpotency_class=len(series),
        w=sum(heights),
        u=u,
        series_dims=tuple(len(z) for z in series),
    )


def is_nilpotent(L: LieAlgebra) -> bool:
    series = upper_central_series(L)
    return bool(series) and len(series[-1]) == L.dim


# --- constructions --------------------------------------------------------

def direct_sum(L: LieAlgebra, N: LieAlgebra, name: str | None = None) -> LieAlgebra:
    """``L + N`` with cross brackets zero; names get ``_1``/``_2`` suffixes on collision."""
    left, right = L.basis, N.basis
    if set(left) & set(right):
        left = tuple(f"{b}_1" for b in left)
        right = tuple(f"{b}_2" for b in right)
        if set(left) & set(right) or len(set(left + right)) != len(left + right):
            left = tuple(f"a{i}" for i in range(L.dim))
            right = tuple(f"b{i}" for i in range(N.dim))
    d = L.dim
    br = {pair: dict(e) for pair, e in L.brackets}
    for (i, j), entries in N.brackets:
        br[(i + d, j + d)] = {l + d: c for l, c in entries}
    return LieAlgebra(left + right, br, name or f"{L.name}+{N.name}")


def power(L: LieAlgebra, n: int) -> LieAlgebra:
    """``L + ... + L`` (n copies); copy k gets basis suffix ``_k``."""
    if n < 1:
        raise ValueError("n must be positive")
    copies = [
        LieAlgebra([f"{b}_{k}" for b in L.basis], {p: dict(e) for p, e in L.brackets}, L.name)
        for k in range(1, n + 1)
    ]
    out = copies[0]
    for c in copies[1:]:
        out = direct_sum(out, c)
    return LieAlgebra(out.basis, out.brackets, f"{L.name}^{n}")


def ideal_closure(L: LieAlgebra, indices) -> list[list[Fraction]]:
    """Basis (rref rows) of the smallest ideal containing the given basis vectors."""
    d = L.dim
    rows = [[Fraction(int(t == c)) for t in range(d)] for c in sorted(set(indices))]
    rows, _ = rref(rows)
    changed = True
    while changed:
        changed = False
        for v in list(rows):
            for j in range(d):
                e = [Fraction(int(t == j)) for t in range(d)]
                w = L.bracket_vectors(v, e)
                if any(w) and not in_span(rows, w):
                    rows, _ = rref(rows + [w])
                    changed = True
    return rows


def quotient_by_basis_subset(L: LieAlgebra, subset, name: str | None = None) -> LieAlgebra:
    """Quotient by the ideal generated by ``{x_c : c in subset}``.

    Only defined when that ideal is spanned by basis vectors.
    """
    subset = sorted(set(subset))
    for c in subset:
        if not 0 <= c < L.dim:
            raise MalformedAlgebraError(f"index {c} out of range")
    if not subset:
        return L
    rows = ideal_closure(L, subset)
    support = sorted({t for r in rows for t, x in enumerate(r) if x != 0})
    if len(support) != len(rows):
        raise UnsupportedQuotientError(
            f"ideal generated by {[L.basis[c] for c in subset]} is not spanned by basis vectors")
    killed = set(support)
    keep = [t for t in range(L.dim) if t not in killed]
    if not keep:
        raise UnsupportedQuotientError("quotient is zero-dimensional")
    renum = {t: k for k, t in enumerate(keep)}
    br = {}
    for (i, j), entries in L.brackets:
        if i in renum and j in renum:
            vec = {renum[l]: c for l, c in entries if l in renum}
            if vec:
                br[(renum[i], renum[j])] = vec
    return LieAlgebra([L.basis[t] for t in keep], br, name or f"{L.name}/{','.join(L.basis[c] for c in subset)}")


# --- catalog --------------------------------------------------------------

def heisenberg() -> LieAlgebra:
    return LieAlgebra(["x", "y", "z"], {(0, 1): {2: 1}}, "heisenberg")


def abelian(d: int) -> LieAlgebra:
    if d < 1:
        raise ValueError("abelian algebra needs dimension >= 1")
    return LieAlgebra([f"x{i}" for i in range(1, d + 1)], {}, f"abelian{d}")


def free_class2(n: int) -> LieAlgebra:
    """F_{2,n}: x_1..x_n then y_ij (i<j) in lexicographic order, [x_i, x_j] = y_ij."""
    if n < 2:
        raise ValueError("f2 needs n >= 2")
    names = [f"x{i}" for i in range(1, n + 1)]
    br = {}
    for i, j in combinations(range(n), 2):
        br[(i, j)] = {len(names): 1}
        names.append(f"y{i + 1}{j + 1}" if n < 10 else f"y{i + 1}_{j + 1}")
    return LieAlgebra(names, br, f"f2_{n}")


def maximal_class(q: int) -> LieAlgebra:
    """M_q: basis y, x_1..x_q with [y, x_i] = x_{i+1}."""
    if q < 1:
        raise ValueError("mq needs q >= 1")
    names = ["y"] + [f"x{i}" for i in range(1, q + 1)]
    br = {(0, i): {i + 1: 1} for i in range(1, q)}
    return LieAlgebra(names, br, f"m{q}")


def filiform4() -> LieAlgebra:
    names = ["z", "x1", "x2", "x3", "x4"]
    br = {(0, 1): {2: 1}, (0, 2): {3: 1}, (0, 3): {4: 1}, (1, 2): {4: 1}}
    return LieAlgebra(names, br, "fil4")


def woodward() -> LieAlgebra:
    """L_W: basis z, w1, w2, x1, x2, y."""
    names = ["z", "w1", "w2", "x1", "x2", "y"]
    br = {(0, 1): {3: 1}, (0, 2): {4: 1}, (0, 3): {5: 1}}
    return LieAlgebra(names, br, "lw")


BUILTINS = {
    "heisenberg": (heisenberg, False),
    "f2": (free_class2, True),
    "mq": (maximal_class, True),
    "fil4": (filiform4, False),
    "lw": (woodward, False),
    "abelian": (abelian, True),
}


def builtin(name: str, param: int | None = None) -> LieAlgebra:
    try:
        factory, needs_param = BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown builtin {name!r}; choose from {sorted(BUILTINS)}") from None
    if needs_param:
        if param is None:
            raise ValueError(f"builtin {name!r} needs an integer parameter")
        return factory(int(param))
    if param is not None:
        raise ValueError(f"builtin {name!r} takes no parameter")
    return factory()
