"""Exact Gaussian elimination over any field in ``exactnum``.

Matrices are lists of rows of field elements.  Pivoting is deterministic:
leftmost column first, then the first row carrying a nonzero entry.
"""
from __future__ import annotations

from .errors import InputError


def rref(rows, ncols):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inv()
        m[r] = [x * inv for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols, field):
    """Basis of {v : rows * v = 0}, one vector per free column (set to 1)."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def det(mat, field):
    n = len(mat)
    m = [list(r) for r in mat]
    out = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            out = -out
        out = out * m[c][c]
        inv = m[c][c].inv()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return out


def inverse(mat, field):
    n = len(mat)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(mat)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise InputError("matrix is singular")
    return [row[n:] for row in red]


def solve_columns(basis_cols, rhs_cols, field):
    """Coordinates of each rhs column in terms of linearly independent columns.

    Raises ``InputError`` if some rhs is outside the span or the basis columns
    are dependent.
    """
    k = len(basis_cols)
    if k == 0:
        for rhs in rhs_cols:
            if any(rhs):
                raise InputError("vector outside the span")
        return [[] for _ in rhs_cols]
    nrows = len(basis_cols[0])
    aug = [[basis_cols[j][i] for j in range(k)] + [rhs[i] for rhs in rhs_cols]
           for i in range(nrows)]
    red, pivots = rref(aug, k + len(rhs_cols))
    if pivots[:k] != list(range(k)):
        raise InputError("basis columns are linearly dependent")
    if len(pivots) > k:
        raise InputError("vector outside the span")
    return [[red[i][k + j] for i in range(k)] for j in range(len(rhs_cols))]


def charpoly(mat, field):
    """Coefficients (low to high) of det(x I - mat), via Hessenberg reduction."""
    n = len(mat)
    h = [list(r) for r in mat]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if h[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            h[piv], h[m] = h[m], h[piv]
            for row in h:
                row[piv], row[m] = row[m], row[piv]
        t = h[m][m - 1]
        tinv = t.inv()
        for i in range(m + 1, n):
            u = h[i][m - 1] * tinv
            if u:
                h[i] = [a - u * b for a, b in zip(h[i], h[m])]
                for row in h:
                    row[m] = row[m] + u * row[i]
    zero, one = field.zero, field.one

    def sub(a, b):
        out = [zero] * max(len(a), len(b))
        for i, x in enumerate(a):
            out[i] = out[i] + x
        for i, x in enumerate(b):
            out[i] = out[i] - x
        return out

    def scale(a, c):
        return [x * c for x in a]

    polys = [[one]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = sub([zero] + prev, scale(prev, h[m - 1][m - 1]))
        t = one
        for i in range(1, m):
            t = t * h[m - i][m - i - 1]
            cur = sub(cur, scale(polys[m - i - 1], t * h[m - i - 1][m - 1]))
        polys.append(cur)
    return polys[n]
