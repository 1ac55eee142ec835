"""Brute-force invariant search by linear algebra.

For a group given by generators acting on F[x1..xj], the invariants of a
fixed total degree form the kernel of the stacked maps f -> g.f - f.  The
action is lower triangular, so it preserves the filtration by x_j-degree and
the least positive x_j-degree of an invariant is the first filtration step
where the kernel grows.
"""
from __future__ import annotations

import itertools
from math import comb

from .config import caps
from .poly import MultiPoly, linear_images


class DimensionCapExceeded(RuntimeError):
    pass


def monomials(n_vars: int, deg: int, n: int):
    """Exponent tuples of length n, supported on x1..x_{n_vars}, total degree deg."""
    for combo in itertools.combinations_with_replacement(range(n_vars), deg):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def invariant_dims(ctx, gens, j: int, d: int, n: int):
    """dims[e] = dim of degree-d invariants in x1..xj with x_j-degree <= e."""
    basis = sorted(monomials(j, d, n), key=lambda e: e[j - 1])
    if len(basis) > caps().dim:
        raise DimensionCapExceeded(f"{len(basis)} monomials exceed cap {caps().dim}")
    images = [linear_images(ctx, g) for g in gens]
    rows_index: dict = {}
    pivots: dict = {}  # leading row -> column vector normalised to 1 there
    neg, mt, at = ctx.neg, ctx.mul_t, ctx.add_t
    dims = [0] * (d + 1)
    rank = 0
    for k, mono in enumerate(basis):
        # column k: coefficients of g.m - m, stacked over the generators
        m = MultiPoly(ctx, n, {mono: 1})
        v = {}
        for gi, img in enumerate(images):
            for e, c in (m.substitute(img) - m).terms.items():
                v[rows_index.setdefault((gi, e), len(rows_index))] = c
        while v:
            r0 = min(v)
            piv = pivots.get(r0)
            if piv is None:
                row = mt[ctx.inv(v[r0])]
                pivots[r0] = {i: row[c] for i, c in v.items()}
                rank += 1
                break
            f = mt[neg(v[r0])]
            for i, c in piv.items():
                s = at[v.get(i, 0)][f[c]]
                if s:
                    v[i] = s
                else:
                    v.pop(i, None)
        dims[mono[j - 1]] = k + 1 - rank
    # fill the degrees that had no monomial of their own
    for e in range(1, d + 1):
        if not any(mono[j - 1] == e for mono in basis):
            dims[e] = dims[e - 1]
    return dims


def oracle_min_degree(ctx, gens, j: int, D: int, n: int):
    """Least positive x_j-degree of a nonzero invariant in F[x1..xj] of degree <= D.

    Returns None when no such invariant exists within the degree bound.
    """
    total = sum(comb(d + j - 1, j - 1) for d in range(1, D + 1))
    if total > caps().dim:
        raise DimensionCapExceeded(f"{total} monomials up to degree {D} exceed cap {caps().dim}")
    best = None
    for d in range(1, D + 1):
        dims = invariant_dims(ctx, gens, j, d, n)
        for e in range(1, len(dims)):
            if dims[e] > dims[e - 1]:
                if best is None or e < best:
                    best = e
                break
    return best


def graded_invariant_dims(ctx, gens, n: int, D: int):
    """Dimensions of the homogeneous invariants in all n variables, degrees 0..D."""
    out = [1]
    for d in range(1, D + 1):
        out.append(invariant_dims(ctx, gens, n, d, n)[-1])
    return out
