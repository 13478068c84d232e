"""Exact linear algebra over the rationals and the integers.

Vectors and matrices are plain lists (of lists) of ``Fraction`` or ``int``.
Nothing here touches floating point.
"""

from fractions import Fraction


def rref(rows):
    """Reduced row echelon form over Q.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[0])


def nullspace(rows, ncols):
    """Basis of ``{v : rows . v = 0}`` in Q^ncols."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def in_span(rows, v):
    if not any(v):
        return True
    return rank(list(rows) + [v]) == rank(rows)


def hermite_normal_form(rows):
    """Row-style Hermite normal form of an integer matrix.

    Only unimodular row operations are used, so the nonzero rows of the
    result are a basis of the same lattice.  Pivots are positive and entries
    above a pivot are reduced into ``[0, pivot)``.
    """
    m = [list(map(int, r)) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    pivot_cols = []
    for c in range(ncols):
        # Euclid on column c among rows r.. until at most one nonzero remains.
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(m[i][c]))
            m[r], m[p] = m[p], m[r]
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c] != 0:
                    q = m[i][c] // m[r][c]
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    if m[i][c] != 0:
                        done = False
            if done:
                break
        if r < len(m) and m[r][c] != 0:
            if m[r][c] < 0:
                m[r] = [-a for a in m[r]]
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
            pivot_cols.append(c)
            r += 1
            if r == len(m):
                break
    return [row for row in m[:r]]


def integer_kernel(rows, ncols):
    """Lattice basis (in Hermite normal form) of ``{x in Z^ncols : rows . x = 0}``.

    Row-reduces ``[A^T | I]`` over Z; rows whose ``A^T`` part vanishes carry
    the kernel in their identity part.
    """
    m = len(rows)
    aug = []
    for c in range(ncols):
        left = [int(rows[k][c]) for k in range(m)]
        right = [1 if t == c else 0 for t in range(ncols)]
        aug.append(left + right)
    h = hermite_normal_form(aug)
    kernel = [row[m:] for row in h if not any(row[:m])]
    return hermite_normal_form(kernel)

