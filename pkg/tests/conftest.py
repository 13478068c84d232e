import random
import sys
from fractions import Fraction

import pytest

from redzeta.algebra import (
    LieAlgebra,
    abelian,
    filiform4,
    free_class2,
    heisenberg,
    maximal_class,
    validate,
    woodward,
)


def builtin_algebras():
    """Every builtin family at desk-scale parameters."""
    algs = [heisenberg(), free_class2(2), free_class2(3), filiform4(), woodward()]
    algs += [maximal_class(q) for q in range(1, 6)]
    algs += [abelian(d) for d in range(1, 5)]
    return algs


def random_simple_algebras(count, seed=20240, max_dim=5):
    """Jacobi-valid algebras with sparse unit-coefficient monomial brackets."""
    rng = random.Random(seed)
    out, seen = [], set()
    while len(out) < count:
        d = rng.randint(2, max_dim)
        pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
        k = rng.randint(1, min(len(pairs), d))
        brackets = {p: {rng.randrange(d): Fraction(rng.choice([1, -1, 2]))}
                    for p in rng.sample(pairs, k)}
        L = LieAlgebra([f"e{i}" for i in range(d)], brackets, name=f"rand{len(out)}")
        key = (d, L.brackets)
        if key in seen or not validate(L).ok:
            continue
        seen.add(key)
        out.append(L)
    return out


@pytest.fixture(scope="session")
def builtins():
    return builtin_algebras()


@pytest.fixture(scope="session")
def random_algebras():
    return random_simple_algebras(60)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        title, ok, why = results[n]
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  [{why}]" if why else ""))
