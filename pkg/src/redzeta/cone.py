"""Polyhedral cones attached to a simple basis.

A ``ConeSystem`` is the set of ``y >= 0`` cut out by homogeneous
inequalities ``q . y >= strict`` with ``q`` in {-1, 0, 1}^d.  Lattice points
of the closed ideal (resp. subalgebra) cone are exactly the exponent vectors
``n`` for which the diagonal module ``span{t^{n_i} x_i}`` is an ideal (resp.
subalgebra).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .algebra import LieAlgebra, SimpleBracketTable, height_profile, simple_table
from .errors import PrecCycleError

Variant = Literal["ideal", "subalgebra"]

_VARIANT_ALIASES = {
    "ideal": "ideal", "ideals": "ideal", "normal": "ideal",
    "sub": "subalgebra", "subalgebra": "subalgebra", "subalgebras": "subalgebra",
}


def normalize_variant(variant: str) -> str:
    try:
        return _VARIANT_ALIASES[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; use 'ideal' or 'sub'") from None


@dataclass(frozen=True)
class ConeSystem:
    d: int
    constraints: tuple[tuple[tuple[int, ...], int], ...]
    axis_strict: tuple[int, ...]

    def __post_init__(self):
        for q, s in self.constraints:
            if len(q) != self.d or not any(q) or any(x not in (-1, 0, 1) for x in q):
                raise ValueError(f"bad constraint vector {q}")
            if s not in (0, 1):
                raise ValueError(f"bad strictness flag {s}")
        if len(self.axis_strict) != self.d or any(s not in (0, 1) for s in self.axis_strict):
            raise ValueError("axis_strict must have one 0/1 flag per coordinate")

    @classmethod
    def make(cls, d, constraints, axis_strict=None):
        cons = tuple(sorted({(tuple(int(x) for x in q), int(s)) for q, s in constraints}))
        return cls(d, cons, tuple(axis_strict) if axis_strict is not None else (0,) * d)

    @property
    def is_closed(self) -> bool:
        return not any(self.axis_strict) and not any(s for _, s in self.constraints)

    def closure(self) -> ConeSystem:
        return ConeSystem.make(self.d, [(q, 0) for q, _ in self.constraints])

    def describe(self, names=None) -> list[str]:
        names = names or [f"y{i}" for i in range(self.d)]
        out = []
        for q, s in self.constraints:
            parts = []
            for i, x in enumerate(q):
                if x:
                    sign = "+" if x > 0 else "-"
                    parts.append(f"{sign} {names[i]}" if parts or x < 0 else names[i])
            out.append(f"{' '.join(parts)} {'>' if s else '>='} 0")
        return out


def interior(C: ConeSystem) -> ConeSystem:
    return ConeSystem.make(C.d, [(q, 1) for q, _ in C.constraints], (1,) * C.d)


def contains(C: ConeSystem, n) -> bool:
    if any(x < s for x, s in zip(n, C.axis_strict)):
        return False
    for q, s in C.constraints:
        if sum(a * b for a, b in zip(q, n)) < s:
            return False
    return True


def free_orthant(d: int) -> ConeSystem:
    return ConeSystem.make(d, [])


# --- the order "x_l below x_i" -----------------------------------------------

@dataclass(frozen=True)
class PrecOrder:
    """``(l, i)`` in ``relation`` means ``x_l`` precedes ``x_i``."""

    d: int
    direct: frozenset
    relation: frozenset

    def below(self, i):
        return sorted(l for l, k in self.relation if k == i)


def _direct_pairs(T: SimpleBracketTable):
    pairs = set()
    for (i, j), (l, _a) in T.items():
        pairs.add((l, i))
        pairs.add((l, j))
    return pairs


def _find_cycle(d, pairs):
    succ = {v: sorted(i for l, i in pairs if l == v) for v in range(d)}
    state = [0] * d
    stack = []

    def dfs(v):
        state[v] = 1
        stack.append(v)
        for w in succ[v]:
            if state[w] == 1:
                return stack[stack.index(w):] + [w]
            if state[w] == 0:
                found = dfs(w)
                if found:
                    return found
        state[v] = 2
        stack.pop()
        return None

    for v in range(d):
        if state[v] == 0:
            found = dfs(v)
            if found:
                return found
    return None


def _transitive_closure(d, pairs):
    reach = [set() for _ in range(d)]
    for l, i in pairs:
        reach[l].add(i)
    changed = True
    while changed:
        changed = False
        for v in range(d):
            extra = set()
            for w in reach[v]:
                extra |= reach[w]
            if not extra <= reach[v]:
                reach[v] |= extra
                changed = True
    return frozenset((l, i) for l in range(d) for i in reach[l])


def prec_order(T: SimpleBracketTable, d: int | None = None) -> PrecOrder:
    d = T.dim if d is None else d
    direct = _direct_pairs(T)
    cycle = _find_cycle(d, direct)
    if cycle:
        raise PrecCycleError(cycle)
    return PrecOrder(d, frozenset(direct), _transitive_closure(d, direct))


def _hasse(d, pairs):
    """Transitive reduction of an acyclic relation."""
    closure = _transitive_closure(d, pairs)
    keep = set()
    for l, i in pairs:
        if not any((l, r) in closure and (r, i) in closure for r in range(d) if r not in (l, i)):
            keep.add((l, i))
    return keep


def build_cone(T: SimpleBracketTable, variant: str, d: int | None = None) -> ConeSystem:
    """Closed cone of the simple bracket table.

    ideal: ``y_l <= y_i`` and ``y_l <= y_j`` per ``[x_i, x_j] = a x_l``.  When
    those pairs form an acyclic relation only its covering pairs are kept;
    the dropped inequalities follow by transitivity, so the cone is the same
    and two algebras with the same order get syntactically equal cones.

    subalgebra: ``y_l <= y_i + y_j`` per bracket.
    """
    variant = normalize_variant(variant)
    d = T.dim if d is None else d
    rows = []
    if variant == "ideal":
        pairs = {(l, i) for l, i in _direct_pairs(T) if l != i}
        if _find_cycle(d, pairs) is None:
            pairs = _hasse(d, pairs)
        for l, i in pairs:
            q = [0] * d
            q[i] += 1
            q[l] -= 1
            rows.append((q, 0))
    else:
        for (i, j), (l, _a) in T.items():
            q = [0] * d
            q[i] += 1
            q[j] += 1
            q[l] -= 1
            rows.append((q, 0))
    return ConeSystem.make(d, rows)


def algebra_cone(L: LieAlgebra, variant: str) -> ConeSystem:
    return build_cone(simple_table(L), variant, L.dim)


@dataclass(frozen=True)
class FunEqIdHypothesis:
    holds: bool
    w: int | None
    violations: tuple = ()  # (l, i) pairs lacking an intermediate element


def check_funeqid_hypothesis(L: LieAlgebra) -> FunEqIdHypothesis:
    """Chain condition: a height gap > 1 along the order needs an intermediate element."""
    T = simple_table(L)
    hp = height_profile(L)
    order = prec_order(T, L.dim)
    h = hp.heights
    rel = order.relation
    bad = []
    for l, i in sorted(rel):
        if h[i] > h[l] + 1:
            if not any((l, r) in rel and (r, i) in rel for r in range(L.dim)):
                bad.append((l, i))
    return FunEqIdHypothesis(not bad, hp.w if not bad else None, tuple(bad))
