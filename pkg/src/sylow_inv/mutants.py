"""Deliberately broken variants of the constructions, for checking that the
suites notice.  Each mutant patches one module attribute for the duration of
a ``with`` block and clears the caches that could hold unpatched results.
"""
from __future__ import annotations

import contextlib

from . import families as fam
from . import groups as grp
from . import linalg as la
from .groups import GroupSpec
from .poly import MultiPoly


def _clear_caches():
    for f in (grp.g1_generators, grp.generators, fam.norm, fam.psi_images):
        f.cache_clear()


def _flip_first(f: MultiPoly) -> MultiPoly:
    """Negate the coefficient of the grevlex-leading term."""
    e, c = f.leading()
    terms = dict(f.terms)
    terms[e] = f.ctx.neg(c)
    return MultiPoly(f.ctx, f.n, terms)


def _shift_index(f: MultiPoly) -> MultiPoly:
    """Move the leading term's highest variable down by one index."""
    e, c = f.leading()
    top = max(i for i, a in enumerate(e) if a)
    e2 = list(e)
    e2[top - 1] += e2[top]
    e2[top] = 0
    terms = dict(f.terms)
    del terms[e]
    terms[tuple(e2)] = f.ctx.add(terms.get(tuple(e2), 0), c)
    return MultiPoly(f.ctx, f.n, {k: v for k, v in terms.items() if v})


def _patch_h(transform):
    orig = fam.h_poly

    def h_poly(spec, k):
        f = orig(spec, k)
        return transform(f) if k == 1 else f
    return fam, "h_poly", h_poly


def _patch_omega():
    orig = fam.omega

    def omega(ctx, n, s, j, r=None):
        f = orig(ctx, n, s, j, r)
        return _flip_first(f) if j == -1 and f else f
    return fam, "omega", omega


def _patch_assemble(edit):
    orig = grp.assemble

    def assemble(spec, A, B, F, S):
        if edit == "C-conj":
            return orig(spec, A, B, F, grp.conj_mat(spec, S))
        M = [list(r) for r in orig(spec, A, B, F, S)]
        nb, l, ctx = spec.n_blk, spec.l, spec.ctx
        lo = nb + l
        if edit == "D-sign":
            for i in range(lo, lo + nb):
                for j in range(nb, lo):
                    M[i][j] = ctx.neg(M[i][j])
        elif edit == "E-transpose":
            E = [[M[lo + i][lo + j] for j in range(nb)] for i in range(nb)]
            for i in range(nb):
                for j in range(nb):
                    M[lo + i][lo + j] = E[j][i]
        return tuple(tuple(r) for r in M)
    return grp, "assemble", assemble


def _patch_solve_s():
    orig = grp.solve_s

    def solve_s(spec, B, S_lower, S_diag):
        S = [list(r) for r in orig(spec, B, S_lower, S_diag)]
        if len(S) > 1:
            S[0][1] = spec.ctx.neg(S[0][1])
        return tuple(tuple(r) for r in S)
    return grp, "solve_s", solve_s


# name -> (patch factory, grid point where it is visible, suites that should catch it)
MUTANTS = {
    "h-sign": (lambda: _patch_h(_flip_first), GroupSpec("o-odd", 2, 3), ("invariance",)),
    "h-index": (lambda: _patch_h(_shift_index), GroupSpec("gu-even", 2, 2), ("invariance",)),
    "omega-sign": (_patch_omega, GroupSpec("sp", 2, 3), ("invariance",)),
    "block-D-sign": (lambda: _patch_assemble("D-sign"), GroupSpec("sp", 2, 3), ("group",)),
    "block-E-transpose": (lambda: _patch_assemble("E-transpose"), GroupSpec("o-odd", 2, 3), ("group",)),
    "block-C-conj": (lambda: _patch_assemble("C-conj"), GroupSpec("gu-odd", 2, 2), ("group",)),
    "block-S-sign": (_patch_solve_s, GroupSpec("sp", 3, 3), ("group",)),
}


@contextlib.contextmanager
def applied(name: str | None):
    """Run the body with mutant ``name`` patched in (no-op for None)."""
    if name is None:
        yield
        return
    if name not in MUTANTS:
        raise KeyError(f"unknown mutant {name!r}; choose from {', '.join(MUTANTS)}")
    mod, attr, new = MUTANTS[name][0]()
    old = getattr(mod, attr)
    _clear_caches()
    setattr(mod, attr, new)
    try:
        yield
    finally:
        setattr(mod, attr, old)
        _clear_caches()


__all__ = ["MUTANTS", "applied", "la"]
