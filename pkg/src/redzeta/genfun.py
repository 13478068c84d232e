"""Lattice-point generating functions of cones by MacMahon's Omega calculus.

A cone ``{y >= 0 : q_k . y >= s_k}`` is encoded as the crude generating
function

    prod_k lambda_k^{-s_k} / prod_i (1 - T prod_k lambda_k^{q_ki})

and ``Omega_>=`` (keep terms with every lambda-exponent >= 0, then put
lambda = 1) is applied one variable at a time.  Each variable is removed by
Elliott's identity

    1/((1-A)(1-B)) = 1/(1-AB) * (1/(1-A) + 1/(1-B) - 1)

applied to a factor with positive lambda-exponent against one with negative
exponent, until only one sign remains and the operator can be read off.

Monomials are integer tuples ``(T-exponent, e_0, ..., e_{m-1})``.  A term is
``coeff * num / prod_{mu in den} (1 - mu)`` with ``den`` a sorted tuple.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .cone import ConeSystem
from .errors import OmegaInvariantError, ResourceLimitError
from .ratfun import Polynomial, RationalFunction

log = logging.getLogger(__name__)

DEFAULT_TERM_LIMIT = 10**6


@dataclass
class GFExpression:
    """``terms`` maps ``(num, den)`` to a nonzero rational coefficient."""

    nvars: int
    terms: dict
    active: frozenset

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_pow(a, m):
    return tuple(x * m for x in a)


def _drop(mono, k):
    if mono[k + 1] == 0:
        return mono
    lst = list(mono)
    lst[k + 1] = 0
    return tuple(lst)


def crude_gf(C: ConeSystem) -> GFExpression:
    rows = [(q, s) for q, s in C.constraints]
    for i, s in enumerate(C.axis_strict):
        if s:
            e = [0] * C.d
            e[i] = 1
            rows.append((tuple(e), 1))
    m = len(rows)
    num = (0,) + tuple(-s for _, s in rows)
    den = tuple(sorted((1,) + tuple(q[i] for q, _ in rows) for i in range(C.d)))
    return GFExpression(m, {(num, den): Fraction(1)}, frozenset(range(m)))


def _compositions_below(weights, bound):
    """Exponent vectors ``m >= 0`` with ``sum w_s m_s < bound`` (all ``w_s > 0``)."""
    if bound <= 0:
        return
    if not weights:
        yield ()
        return
    w, rest = weights[0], weights[1:]
    for m0 in range(0, (bound - 1) // w + 1):
        for tail in _compositions_below(rest, bound - w * m0):
            yield (m0,) + tail


def _finalize(coeff, num, den, k, out):
    """Apply Omega_>= in lambda_k to a term whose lambda_k-factors share one sign."""
    e = num[k + 1]
    free = [mu for mu in den if mu[k + 1] == 0]
    pos = [mu for mu in den if mu[k + 1] > 0]
    neg = [mu for mu in den if mu[k + 1] < 0]
    if pos and neg:
        raise OmegaInvariantError("finalize called with mixed signs")
    free_t = tuple(sorted(free))
    if pos or not neg:
        base_num = _drop(num, k)
        if e >= 0:
            # every monomial of the expansion already has exponent >= 0
            key = (base_num, tuple(sorted(free + [_drop(mu, k) for mu in pos])))
            out[key] += coeff
            return
        # subtract the finitely many monomials with total exponent < 0
        key = (base_num, tuple(sorted(free + [_drop(mu, k) for mu in pos])))
        out[key] += coeff
        weights = [mu[k + 1] for mu in pos]
        for ms in _compositions_below(weights, -e):
            mono = base_num
            for mu, mult in zip(pos, ms):
                if mult:
                    mono = _mono_mul(mono, _drop(_mono_pow(mu, mult), k))
            out[(mono, free_t)] -= coeff
        return
    # only negative factors: keep monomials with e - sum b_s m_s >= 0
    if e < 0:
        return
    weights = [-mu[k + 1] for mu in neg]
    base_num = _drop(num, k)
    for ms in _compositions_below(weights, e + 1):
        mono = base_num
        for mu, mult in zip(neg, ms):
            if mult:
                mono = _mono_mul(mono, _drop(_mono_pow(mu, mult), k))
        out[(mono, free_t)] += coeff


def _pick_pair(den, k):
    pos = [idx for idx, mu in enumerate(den) if mu[k + 1] > 0]
    neg = [idx for idx, mu in enumerate(den) if mu[k + 1] < 0]
    if not pos or not neg:
        return None
    a = max(pos, key=lambda idx: (den[idx][k + 1], den[idx]))
    b = min(neg, key=lambda idx: (-den[idx][k + 1], den[idx]))
    return a, b


def _eliminate_term(coeff, num, den, k, out, limit):
    stack = [(coeff, den)]
    steps = 0
    while stack:
        c, dn = stack.pop()
        pair = _pick_pair(dn, k)
        if pair is None:
            _finalize(c, num, dn, k, out)
            continue
        ia, ib = pair
        A, B = dn[ia], dn[ib]
        AB = _mono_mul(A, B)
        if AB[0] < 1:
            raise OmegaInvariantError("denominator monomial lost its T-degree")
        rest = [mu for idx, mu in enumerate(dn) if idx not in (ia, ib)]
        stack.append((c, tuple(sorted(rest + [AB, A]))))
        stack.append((c, tuple(sorted(rest + [AB, B]))))
        stack.append((-c, tuple(sorted(rest + [AB]))))
        steps += 1
        if len(stack) > limit or steps > 50 * limit:
            raise ResourceLimitError(f"Omega elimination exceeded {limit} pending terms")


def omega_eliminate(E: GFExpression, k: int, limit: int = DEFAULT_TERM_LIMIT) -> GFExpression:
    """Apply Omega_>= in the variable lambda_k to every term of E."""
    if k not in E.active:
        raise ValueError(f"variable {k} is not active")
    out: dict = defaultdict(Fraction)
    for (num, den), coeff in E.sorted_terms():
        if not all(mu[0] >= 1 for mu in den):
            raise OmegaInvariantError("denominator monomial without positive T-degree")
        _eliminate_term(coeff, num, den, k, out, limit)
        if len(out) > limit:
            raise ResourceLimitError(f"Omega elimination exceeded {limit} terms")
    terms = {key: c for key, c in out.items() if c != 0}
    return GFExpression(E.nvars, terms, E.active - {k})


def _cost(E: GFExpression, k: int) -> int:
    total = 0
    for (_num, den) in E.terms:
        p = sum(1 for mu in den if mu[k + 1] > 0)
        n = sum(1 for mu in den if mu[k + 1] < 0)
        total += p * n
    return total


def choose_variable(E: GFExpression) -> int:
    """Active variable with the fewest positive-by-negative factor pairs."""
    return min(sorted(E.active), key=lambda k: _cost(E, k))


def eliminate_all(E: GFExpression, order=None, limit: int = DEFAULT_TERM_LIMIT) -> GFExpression:
    order = list(order) if order is not None else None
    if order is not None and sorted(order) != sorted(E.active):
        raise ValueError("order must be a permutation of the active variables")
    while E.active:
        k = order.pop(0) if order is not None else choose_variable(E)
        E = omega_eliminate(E, k, limit)
        log.debug("eliminated lambda_%d: %d terms", k, len(E))
    return E


def _times_one_minus_power(coeffs, b, times):
    for _ in range(times):
        out = coeffs + [0] * b
        for i, c in enumerate(coeffs):
            if c:
                out[i + b] -= c
        coeffs = out
    return coeffs


def to_rational_function(E: GFExpression) -> RationalFunction:
    """Sum the lambda-free terms ``c T^a / prod (1 - T^b)`` exactly."""
    if E.active:
        raise ValueError("variables remain to be eliminated")
    groups: dict = defaultdict(lambda: defaultdict(Fraction))
    for (num, den), c in E.terms.items():
        if any(num[1:]) or any(any(mu[1:]) for mu in den):
            raise OmegaInvariantError("lambda survived elimination")
        key = tuple(sorted(Counter(mu[0] for mu in den).items()))
        groups[key][num[0]] += c
    if not groups:
        return RationalFunction.constant(0)
    lcm: dict[int, int] = {}
    for key in groups:
        for b, m in key:
            lcm[b] = max(lcm.get(b, 0), m)
    total: list = []
    for key, numer in sorted(groups.items()):
        p = [Fraction(0)] * (max(numer) + 1)
        for a, c in numer.items():
            p[a] += c
        have = dict(key)
        for b, m in sorted(lcm.items()):
            p = _times_one_minus_power(p, b, m - have.get(b, 0))
        if len(p) > len(total):
            total += [0] * (len(p) - len(total))
        for i, c in enumerate(p):
            total[i] += c
    den = [1]
    for b, m in sorted(lcm.items()):
        den = _times_one_minus_power(den, b, m)
    return RationalFunction(Polynomial(total), Polynomial(den))


def cone_genfun(C: ConeSystem, order=None, limit: int = DEFAULT_TERM_LIMIT) -> RationalFunction:
    """``sum_{n in C cap Z^d} T^{n_1 + ... + n_d}`` as a reduced rational function."""
    return to_rational_function(eliminate_all(crude_gf(C), order, limit))
