"""Line-oriented text format for Lie algebras.

::

    # comments start with '#'
    algebra heisenberg
    dim 3
    basis x y z
    bracket x y = z          # [x, y] = z
    bracket x z = -1/2 y     # optional rational coefficient

Repeated brackets of the same pair accumulate into one sparse vector.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import LieAlgebra
from .errors import AlgebraFileError, MalformedAlgebraError

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_.']*\Z")
_TOKEN = re.compile(r"\S+")


def _tokens(line):
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def parse_algebra(text: str, source: str | None = None) -> LieAlgebra:
    def fail(msg, lineno, col=None):
        raise AlgebraFileError(msg, lineno, col, source)

    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = _tokens(body)
        if toks:
            lines.append((lineno, toks))
    if not lines:
        fail("empty algebra file", 1)

    def header(idx, keyword):
        if idx >= len(lines):
            last = lines[-1][0] if lines else 1
            fail(f"expected '{keyword}' line", last + 1, 1)
        lineno, toks = lines[idx]
        if toks[0][0] != keyword:
            fail(f"expected '{keyword}', found {toks[0][0]!r}", lineno, toks[0][1])
        return lineno, toks

    lineno, toks = header(0, "algebra")
    if len(toks) != 2:
        fail("'algebra' takes exactly one name", lineno, toks[min(2, len(toks) - 1)][1])
    name = toks[1][0]

    lineno, toks = header(1, "dim")
    if len(toks) != 2 or not toks[1][0].isdigit() or int(toks[1][0]) < 1:
        fail("'dim' takes one positive integer", lineno, toks[-1][1])
    d = int(toks[1][0])

    lineno, toks = header(2, "basis")
    basis = [t for t, _ in toks[1:]]
    if len(basis) != d:
        fail(f"'basis' lists {len(basis)} names but dim is {d}", lineno, toks[0][1])
    seen = set()
    for t, col in toks[1:]:
        if not _IDENT.match(t):
            fail(f"invalid basis name {t!r}", lineno, col)
        if t in seen:
            fail(f"duplicate basis name {t!r}", lineno, col)
        seen.add(t)
    index = {b: k for k, b in enumerate(basis)}

    brackets: dict = {}
    for lineno, toks in lines[3:]:
        if toks[0][0] != "bracket":
            fail(f"expected 'bracket', found {toks[0][0]!r}", lineno, toks[0][1])
        if len(toks) not in (5, 6) or toks[3][0] != "=":
            fail("expected 'bracket <a> <b> = [<coefficient>] <target>'", lineno, toks[0][1])
        (a, ca), (b, cb) = toks[1], toks[2]
        for t, col in ((a, ca), (b, cb), toks[-1]):
            if t not in index:
                fail(f"unknown basis name {t!r}", lineno, col)
        i, j = index[a], index[b]
        if i == j:
            fail(f"bracket of {a!r} with itself is zero by definition", lineno, cb)
        if i > j:
            fail(f"write brackets in basis order: 'bracket {b} {a} = ...'", lineno, ca)
        coef = Fraction(1)
        if len(toks) == 6:
            t, col = toks[4]
            try:
                coef = Fraction(t)
            except (ValueError, ZeroDivisionError):
                fail(f"invalid rational coefficient {t!r}", lineno, col)
        l = index[toks[-1][0]]
        vec = brackets.setdefault((i, j), {})
        vec[l] = vec.get(l, Fraction(0)) + coef
    try:
        return LieAlgebra(basis, brackets, name)
    except MalformedAlgebraError as exc:
        raise AlgebraFileError(str(exc), None, None, source) from exc


def load_algebra(path) -> LieAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read(), source=str(path))


def format_algebra(L: LieAlgebra) -> str:
    out = [f"algebra {L.name}", f"dim {L.dim}", "basis " + " ".join(L.basis)]
    for (i, j), entries in L.brackets:
        for l, c in entries:
            coef = "" if c == 1 else f"{c} "
            out.append(f"bracket {L.basis[i]} {L.basis[j]} = {coef}{L.basis[l]}")
    return "\n".join(out) + "\n"
