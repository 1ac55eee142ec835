"""Steenrod operations on polynomials over a finite field.

The total operation P(zeta) substitutes x -> x + x^r * zeta with zeta an
extra variable; P^i is the zeta^i coefficient.  P^bullet is the alternating
sum x -> x - x^r.  r is always passed explicitly: the order of the field the
operations are taken over (q for F_q families, q^2 for unitary ones).
"""
from __future__ import annotations

from .poly import MultiPoly


def _check_r(f: MultiPoly, r: int):
    p = f.ctx.p
    x = r
    while x > 1 and x % p == 0:
        x //= p
    if r < p or x != 1:
        raise ValueError(f"r={r} is not a power of the characteristic of {f.ctx}")


def steenrod_expand(f: MultiPoly, r: int) -> list[MultiPoly]:
    """All components [P^0 f, P^1 f, ..., P^d f] with d = deg f."""
    _check_r(f, r)
    n, ctx = f.n, f.ctx
    z = MultiPoly.var(ctx, n + 1, n + 1)
    images = []
    for i in range(1, n + 1):
        x = MultiPoly.var(ctx, n + 1, i)
        images.append(x + (x ** r) * z)
    total = f.substitute(images)
    comps: dict[int, dict] = {}
    for e, c in total.terms.items():
        comps.setdefault(e[n], {})[e[:n]] = c
    top = max(f.degree(), 0)
    return [MultiPoly(ctx, n, comps.get(i, {})) for i in range(top + 1)]


def steenrod_op(f: MultiPoly, i: int, r: int) -> MultiPoly:
    """P^i(f); zero when i exceeds deg f."""
    if i < 0:
        raise ValueError("negative Steenrod index")
    comps = steenrod_expand(f, r)
    return comps[i] if i < len(comps) else MultiPoly.zero(f.ctx, f.n)


def p_bullet(f: MultiPoly, r: int) -> MultiPoly:
    """P^bullet(f) = f(x - x^r)."""
    _check_r(f, r)
    images = [x - x ** r for x in MultiPoly.gens(f.ctx, f.n)]
    return f.substitute(images)


def p_bullet_from_components(f: MultiPoly, r: int) -> MultiPoly:
    """Alternating sum of the components, an independent route to P^bullet."""
    out = MultiPoly.zero(f.ctx, f.n)
    for i, comp in enumerate(steenrod_expand(f, r)):
        out = out + (comp if i % 2 == 0 else -comp)
    return out
