"""Dense matrices over a FieldCtx, stored as tuples of tuples of codes."""
from __future__ import annotations

from functools import reduce


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(r, c):
    return tuple((0,) * c for _ in range(r))


def transpose(A):
    return tuple(zip(*A))


def shape(A):
    return len(A), (len(A[0]) if A else 0)


def matmul(ctx, A, B):
    rows, inner = shape(A)
    cols = shape(B)[1]
    if inner != len(B):
        raise ValueError("shape mismatch")
    if rows == 0 or cols == 0:
        return zeros(rows, cols)
    if inner == 0:
        return zeros(rows, cols)
    mt, at = ctx.mul_t, ctx.add_t
    Bt = transpose(B)
    out = []
    for row in A:
        nz = [(k, mt[a]) for k, a in enumerate(row) if a]
        new = []
        for col in Bt:
            s = 0
            for k, mrow in nz:
                b = col[k]
                if b:
                    s = at[s][mrow[b]]
            new.append(s)
        out.append(tuple(new))
    return tuple(out)


def matprod(ctx, *mats):
    return reduce(lambda A, B: matmul(ctx, A, B), mats)


def madd(ctx, A, B):
    at = ctx.add_t
    return tuple(tuple(at[a][b] for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mneg(ctx, A):
    return tuple(tuple(ctx.neg(a) for a in row) for row in A)


def mscale(ctx, c, A):
    row = ctx.mul_t[c]
    return tuple(tuple(row[a] for a in r) for r in A)


def mconj(ctx, A):
    return tuple(tuple(ctx.conj(a) for a in row) for row in A)


def mfrob(ctx, A, k):
    return tuple(tuple(ctx.frob(a, k) for a in row) for row in A)


def is_lower_unitriangular(A) -> bool:
    n = len(A)
    for i in range(n):
        if A[i][i] != 1:
            return False
        for j in range(i + 1, n):
            if A[i][j]:
                return False
    return True


def inv_lower_unitriangular(ctx, A):
    """Inverse by forward substitution."""
    n = len(A)
    inv = [[0] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = 1
        for i in range(j + 1, n):
            s = 0
            for k in range(j, i):
                s = ctx.add(s, ctx.mul(A[i][k], inv[k][j]))
            inv[i][j] = ctx.neg(s)
    return tuple(tuple(r) for r in inv)


def blocks(rows):
    """Assemble a matrix from a grid of blocks (lists of block rows)."""
    out = []
    for brow in rows:
        height = len(brow[0])
        for i in range(height):
            line = []
            for blk in brow:
                line.extend(blk[i])
            out.append(tuple(line))
    return tuple(out)


def sub_block(A, r0, r1, c0, c1):
    return tuple(tuple(row[c0:c1]) for row in A[r0:r1])


def rref(ctx, rows, ncols):
    """Row-reduce a list of code lists in place order; returns (rows, pivots)."""
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = ctx.inv(rows[rank][c])
        mrow = ctx.mul_t[inv]
        rows[rank] = [mrow[a] for a in rows[rank]]
        prow = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = ctx.neg(rows[i][c])
                fr = ctx.mul_t[f]
                at = ctx.add_t
                rows[i] = [at[a][fr[b]] for a, b in zip(rows[i], prow)]
        pivots.append(c)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def rank(ctx, rows, ncols) -> int:
    return len(rref(ctx, rows, ncols)[1])


def kernel(ctx, rows, ncols):
    """Basis of {v : rows . v = 0}."""
    red, pivots = rref(ctx, rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for r, pc in zip(red, pivots):
            if r[f]:
                v[pc] = ctx.neg(r[f])
        basis.append(v)
    return basis
