"""Gauss-Jordan elimination over an exact field.

Matrices are lists of rows.  Entries only need ``+ - * /`` and truthiness, so
the routines work for Fractions and :class:`~filiform.scalarfield.Scalar`
alike.
"""

from __future__ import annotations


def rref(rows):
    """Reduced row echelon form.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped.  The
    input is not modified.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def solve(matrix, rhs, zero):
    """Solve ``matrix @ x = rhs`` with every free variable set to ``zero``.

    Returns ``None`` when the system is inconsistent.
    """
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for row, c in zip(reduced, pivots):
        x[c] = row[-1]
    return x


def inverse(matrix, zero, one):
    """Inverse of a square matrix, or ``None`` if it is singular."""
    n = len(matrix)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in reduced]


def matvec(matrix, vec, zero):
    out = []
    for row in matrix:
        acc = zero
        for a, b in zip(row, vec):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out
