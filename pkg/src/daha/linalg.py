"""Exact linear algebra over generic coefficient fields.

Matrices are plain lists of lists whose entries live in any exact field:
Fraction, sympy rational-function field elements, cyclotomic elements, and
so on.  Entries must support +, -, *, / and be falsy exactly when zero.
No pivoting heuristics are needed since all arithmetic is exact.
"""

from __future__ import annotations


def mat_copy(rows):
    return [list(r) for r in rows]


def identity_matrix(n, one, zero):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = a[i][0] * b[0][j]
            for l in range(1, m):
                acc = acc + a[i][l] * b[l][j]
            row.append(acc)
        out.append(row)
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in r] for r in a]


def is_zero_matrix(a):
    return all(not x for r in a for x in r)


def mat_vec(a, v):
    out = []
    for row in a:
        acc = row[0] * v[0]
        for l in range(1, len(v)):
            acc = acc + row[l] * v[l]
        out.append(acc)
    return out


def rref(rows):
    """Row-reduce in place; returns (rows, pivot_columns)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(rows):
            break
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(rows):
    _, pivots = rref(mat_copy(rows))
    return len(pivots)


def nullspace(rows, one):
    """Basis of the right kernel; vectors have entries of the same type."""
    zero = one - one
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(mat_copy(rows))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = zero - red[r][fc]
        basis.append(v)
    return basis


def span_dimension(vectors):
    if not vectors:
        return 0
    return rank([list(v) for v in vectors])


def in_span(vectors, v):
    """Whether v lies in the span of the given vectors."""
    base = span_dimension(vectors)
    return span_dimension(list(vectors) + [v]) == base
