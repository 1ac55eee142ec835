"""Invariant polynomial families, additive polynomials and generator lists.

Omega_{s,j}, Gamma_{s,lam} and Lambda_{s,lam} live in F[x1..xn] with
m = floor(n/2); Gamma's square terms sit on x_c, x_{c+1} with c = ceil(n/2),
which is the middle of the quadratic form for both parities of n.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .field import FieldCtx, FieldElement, NotAQuadraticExtension, field_of_order
from .groups import (GroupSpec, g1_generators, generators, minus_a)
from .poly import AlgebraMap, MultiPoly


class LambdaRequiresQuadraticExtension(NotAQuadraticExtension):
    pass


def _code(ctx: FieldCtx, lam) -> int:
    if isinstance(lam, FieldElement):
        return lam.code
    return ctx.from_int(lam)


def _sqrt_order(ctx: FieldCtx) -> int:
    if ctx.half is None:
        raise LambdaRequiresQuadraticExtension(f"Lambda needs F_(q^2); got {ctx}")
    return ctx.p**ctx.half


def omega(ctx: FieldCtx, n: int, s: int, j: int, r: int | None = None) -> MultiPoly:
    r = ctx.r if r is None else r
    if j not in (1, -1):
        raise ValueError("j must be 1 or -1")
    x = MultiPoly.gens(ctx, n)
    out = MultiPoly.zero(ctx, n)
    m = n // 2
    if s == 0:
        if j == -1:
            return out
        for i in range(1, m + 1):
            out = out + x[n - i] * x[i - 1]
        return out
    rs = r**s
    for i in range(1, m + 1):
        a, b = x[n - i], x[i - 1]
        term = a**rs * b
        other = a * b**rs
        out = out + term + (other if j == 1 else -other)
    return out


def gamma(ctx: FieldCtx, n: int, s: int, lam, r: int | None = None) -> MultiPoly:
    r = ctx.r if r is None else r
    lc = _code(ctx, lam)
    x = MultiPoly.gens(ctx, n)
    c = (n + 1) // 2
    xc, xd = x[c - 1], x[c] if c < n else None
    if s == 0:
        out = omega(ctx, n, 0, 1, r) + xc * xc
        if lc:
            out = out + (xd * xd).scale(lc)
        return out
    e = r**s + 1
    tail = xc**e
    if lc:
        tail = tail + (xd**e).scale(lc)
    return omega(ctx, n, s, 1, r) + tail.scale(ctx.from_int(2))


def lam_poly(ctx: FieldCtx, n: int, s: int, lam) -> MultiPoly:
    """Lambda_{s,lam} over F_(q^2), s >= 1."""
    q = _sqrt_order(ctx)
    if s < 1:
        raise ValueError("Lambda_{s,lam} needs s >= 1")
    lc = _code(ctx, lam)
    x = MultiPoly.gens(ctx, n)
    m = n // 2
    e = q ** (2 * s - 1)
    out = MultiPoly.zero(ctx, n)
    for i in range(1, m + 1):
        a, b = x[n - i], x[i - 1]
        out = out + a**e * b + a * b**e
    if lc:
        out = out + (x[m] ** (e + 1)).scale(lc)
    return out


def family_poly(kind: str, n: int, s: int, param, ctx: FieldCtx, r: int | None = None) -> MultiPoly:
    """kind is omega (param j), gamma or lambda (param lam)."""
    if kind == "omega":
        return omega(ctx, n, s, param, r)
    if kind == "gamma":
        return gamma(ctx, n, s, param, r)
    if kind == "lambda":
        return lam_poly(ctx, n, s, param)
    raise ValueError(f"unknown family {kind!r}")


# -- additive polynomials ------------------------------------------------------

def _subfield(ctx: FieldCtx, r: int) -> list[int]:
    k = 0
    while ctx.p**k < r:
        k += 1
    if ctx.p**k != r or ctx.s % k:
        raise ValueError(f"GF({r}) is not a subfield of {ctx}")
    return ctx.fixed_field(k)


@functools.lru_cache(maxsize=None)
def psi_images(ctx: FieldCtx, l: int, r: int, n: int) -> tuple:
    """(psi_l(x_1), ..., psi_l(x_n)) with psi_l(x_i) = F_{l,r}(x_i)."""
    if l == 0:
        return tuple(MultiPoly.gens(ctx, n))
    prev = psi_images(ctx, l - 1, r, n)
    t = prev[l - 1] ** (r - 1)
    return tuple(f**r - t * f for f in prev)


def psi_map(l: int, r: int, n: int, ctx: FieldCtx | None = None) -> AlgebraMap:
    ctx = field_of_order(r) if ctx is None else ctx
    if l > n:
        raise ValueError("need l <= n")
    return AlgebraMap(psi_images(ctx, l, r, n))


def additive_poly(l: int, r: int, i: int, n: int, ctx: FieldCtx | None = None) -> MultiPoly:
    """F_{l,r}(x_i) by the recursion."""
    return psi_map(l, r, n, ctx).images[i - 1]


def span_forms(ctx: FieldCtx, scalars, idx, n):
    """All linear forms sum_{k in idx} a_k x_k with a_k in scalars."""
    for coeffs in itertools.product(scalars, repeat=len(idx)):
        vec = [0] * n
        for k, a in zip(idx, coeffs):
            vec[k - 1] = a
        yield vec


def product_of_forms(ctx: FieldCtx, forms, n) -> MultiPoly:
    """Balanced product tree over linear forms given as code vectors."""
    polys = [MultiPoly.linear(ctx, f) for f in forms]
    if not polys:
        return MultiPoly.const_code(ctx, n, 1)
    while len(polys) > 1:
        nxt = [polys[k] * polys[k + 1] for k in range(0, len(polys) - 1, 2)]
        if len(polys) % 2:
            nxt.append(polys[-1])
        polys = nxt
    return polys[0]


def additive_poly_bruteforce(l: int, r: int, i: int, n: int, ctx: FieldCtx | None = None) -> MultiPoly:
    """prod over u in the F_r-span of x_1..x_l of (x_i - u)."""
    ctx = field_of_order(r) if ctx is None else ctx
    sub = _subfield(ctx, r)
    forms = []
    for vec in span_forms(ctx, sub, range(1, l + 1), n):
        v = [ctx.neg(a) for a in vec]
        v[i - 1] = ctx.add(v[i - 1], 1)
        forms.append(v)
    return product_of_forms(ctx, forms, n)


def dickson_coeffs(n: int, q: int, ctx: FieldCtx | None = None) -> list[MultiPoly]:
    """Dickson invariants c_0..c_{n-1} read off the brute-force product.

    F_{n,q}(X) = X^(q^n) + sum_i (-1)^(n-i) c_i X^(q^i); X is x_{n+1}.
    """
    ctx = field_of_order(q) if ctx is None else ctx
    F = additive_poly_bruteforce(n, q, n + 1, n + 1, ctx)
    return _dickson_from(F, n, q, ctx)


def dickson_coeffs_recursive(n: int, q: int, ctx: FieldCtx | None = None) -> list[MultiPoly]:
    ctx = field_of_order(q) if ctx is None else ctx
    return _dickson_from(additive_poly(n, q, n + 1, n + 1, ctx), n, q, ctx)


def _dickson_from(F: MultiPoly, n, q, ctx):
    parts: dict[int, dict] = {}
    for e, c in F.terms.items():
        parts.setdefault(e[n], {})[e[:n]] = c
    allowed = {q**i for i in range(n + 1)}
    if set(parts) - allowed:
        raise AssertionError("orbit product is not q-additive in X")
    out = []
    for i in range(n):
        c = MultiPoly(ctx, n, parts.get(q**i, {}))
        out.append(c if (n - i) % 2 == 0 else -c)
    return out


# -- orbits --------------------------------------------------------------------

class OrbitCapExceeded(RuntimeError):
    pass


def act_on_form(ctx: FieldCtx, M, vec):
    """Coefficients of (sum c_i x_i) after x -> M x, i.e. the row vector c M."""
    mt, at = ctx.mul_t, ctx.add_t
    n = len(vec)
    out = [0] * n
    for i, c in enumerate(vec):
        if c:
            row = mt[c]
            for j, a in enumerate(M[i]):
                if a:
                    out[j] = at[out[j]][row[a]]
    return tuple(out)


def orbit(ctx: FieldCtx, gens, j: int, n: int, cap: int | None = None):
    from .config import caps
    cap = caps().orbit if cap is None else cap
    start = tuple(1 if k == j - 1 else 0 for k in range(n))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = act_on_form(ctx, g, v)
                if w not in seen:
                    seen.add(w)
                    if len(seen) > cap:
                        raise OrbitCapExceeded(f"orbit of x_{j} exceeds cap {cap}")
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


def _fp_span_basis(ctx, vecs):
    """GF(p)-basis of span(vecs) by greedy insertion; also the span size."""
    span = {tuple([0] * len(vecs[0]))}
    basis = []
    for v in vecs:
        if v in span:
            continue
        basis.append(v)
        new = set()
        for s in span:
            w = s
            for _ in range(ctx.p - 1):
                w = tuple(ctx.add(a, b) for a, b in zip(w, v))
                new.add(w)
        span |= new
    return basis, span


def additive_product(ctx: FieldCtx, j: int, basis, n: int) -> MultiPoly:
    """prod over w in span_{GF(p)}(basis) of (x_j + w), via the p-additive recursion."""
    p = ctx.p
    # P(X) = sum_i coeffs[i] X^(p^i)
    coeffs = [MultiPoly.const_code(ctx, n, 1)]
    for vec in basis:
        W = MultiPoly.linear(ctx, vec)
        val = MultiPoly.zero(ctx, n)
        for i, c in enumerate(coeffs):
            val = val + c * W.frobenius_power(i)
        t = -(val ** (p - 1))
        new = [MultiPoly.zero(ctx, n)] + [c.frobenius_power(1) for c in coeffs]
        for i, c in enumerate(coeffs):
            new[i] = new[i] + t * c
        coeffs = new
    x = MultiPoly.var(ctx, n, j)
    out = MultiPoly.zero(ctx, n)
    for i, c in enumerate(coeffs):
        out = out + c * x.frobenius_power(i)
    return out


def orbit_product(ctx: FieldCtx, gens, j: int, n: int, cap: int | None = None) -> MultiPoly:
    """N(x_j): product of the orbit of x_j."""
    orb = orbit(ctx, gens, j, n, cap)
    start = tuple(1 if k == j - 1 else 0 for k in range(n))
    diffs = {tuple(ctx.sub(a, b) for a, b in zip(v, start)) for v in orb}
    nonzero = sorted(d for d in diffs if any(d))
    if not nonzero:
        return MultiPoly.var(ctx, n, j)
    basis, span = _fp_span_basis(ctx, nonzero)
    if span == diffs:
        return additive_product(ctx, j, basis, n)
    return product_of_forms(ctx, orb, n)


def orbit_product_bruteforce(ctx: FieldCtx, gens, j: int, n: int, cap: int | None = None) -> MultiPoly:
    return product_of_forms(ctx, orbit(ctx, gens, j, n, cap), n)


# -- per-family invariants -----------------------------------------------------

def h_poly(spec: GroupSpec, k: int) -> MultiPoly:
    """The k-th invariant h_k of the family, k >= 1."""
    ctx, n, f = spec.ctx, spec.n, spec.family
    if k < 1:
        raise ValueError("k starts at 1")
    if f == "gu-even":
        return lam_poly(ctx, n, k, 0)
    if f == "gu-odd":
        return lam_poly(ctx, n, k, 1)
    if f == "sp":
        return omega(ctx, n, k, -1)
    if f == "o-plus":
        return omega(ctx, n, k - 1, 1)
    if f == "o-minus":
        return gamma(ctx, n, k - 1, FieldElement(ctx, minus_a(spec)))
    return gamma(ctx, n, k - 1, 0)


def h_chain_index(spec: GroupSpec, k: int) -> int:
    """i with h_k = P^i(h_{k-1}), for k >= 2."""
    q = spec.q
    if spec.unitary:
        return q ** (2 * k - 3)
    if spec.family == "sp":
        return q ** (k - 1)
    return q ** (k - 2)


def h_count(spec: GroupSpec) -> int:
    """Number of h's in the generator list."""
    if spec.family in ("gu-even", "sp", "o-plus"):
        return spec.m - 1
    return spec.m


def norm_range(spec: GroupSpec) -> int:
    """Largest j whose generator is an orbit product (t + d)."""
    return spec.n_blk + spec.l


def h_range_params(spec: GroupSpec):
    """(t, d) with the h-range indices j = t + d + k, k = 1..t."""
    return spec.n_blk, spec.l


def minimal_degree_bound(spec: GroupSpec, k: int) -> int:
    """Least positive x_{t+d+k}-degree of an invariant in R[t+d+k]."""
    t, d = h_range_params(spec)
    if not 1 <= k <= t:
        raise ValueError(f"k must lie in 1..{t}")
    q = spec.q
    if spec.unitary:
        return q ** (2 * (t - k) + 1)
    if spec.family == "sp":
        return q ** (t - k + 1)
    return q ** (t - k)


def expected_norm_degree(spec: GroupSpec, j: int) -> int:
    """Orbit size of x_j predicted by the block structure (G1 for even O+-)."""
    t, d, r, q = spec.n_blk, spec.l, spec.r, spec.q
    if j <= t:
        return r ** (j - 1)
    if j == t + 1:
        return r**t
    # second middle variable
    mid = len(set(_middle_codes(spec)))
    return r**t * mid


def _middle_codes(spec):
    from .groups import allowed_middle
    return [F[1][0] for F in allowed_middle(spec)]


def chain_phi(spec: GroupSpec, j: int, gens=None) -> MultiPoly:
    """phi_j of the descending chain: x_1, orbit products, then psi_{n-j}(h_1)."""
    ctx, n = spec.ctx, spec.n
    gens = g1_generators(spec) if gens is None else gens
    if j == 1:
        return MultiPoly.var(ctx, n, 1)
    if j <= norm_range(spec):
        return norm(spec, j)
    return psi_map(n - j, spec.r, n, ctx)(h_poly(spec, 1))


@functools.lru_cache(maxsize=None)
def norm(spec: GroupSpec, j: int) -> MultiPoly:
    """N(x_j) under G1 (the unitriangular part)."""
    return orbit_product(spec.ctx, g1_generators(spec), j, spec.n)


@dataclass
class GeneratorList:
    spec: GroupSpec
    phis: list
    labels: list
    h_defs: list
    alternatives: dict = field(default_factory=dict)


def field_generators(spec: GroupSpec) -> GeneratorList:
    """Ordered generators of the invariant field of the full Sylow subgroup."""
    m, f = spec.m, spec.family
    x1 = MultiPoly.var(spec.ctx, spec.n, 1)
    hs = [h_poly(spec, k) for k in range(1, h_count(spec) + 1)]
    hl = [f"h_{k}" for k in range(1, len(hs) + 1)]
    alts = {}
    if spec.has_outer and f == "o-plus":
        Ns = [norm(spec, j) for j in range(1, m + 2)]
        head = Ns[:m - 1] + [Ns[m - 1] + Ns[m], Ns[m - 1] * Ns[m]]
        labels = ["x1" if j == 1 else f"N(x{j})" for j in range(1, m)] + [
            f"N(x{m})+N(x{m + 1})", f"N(x{m})*N(x{m + 1})"]
        alts["proof-list"] = labels[:m - 1] + [f"N(x{m})"] + labels[m - 1:] + hl
    elif spec.has_outer and f == "o-minus":
        Ns = [norm(spec, j) for j in range(1, m + 3)]
        a, b = Ns[m], Ns[m + 1]  # N(x_{m+1}), N(x_{m+2})
        head = [x1] + Ns[1:m] + [a * a + b * a, b]
        labels = ["x1"] + [f"N(x{j})" for j in range(2, m + 1)] + [
            f"N(x{m + 1})^2+N(x{m + 2})*N(x{m + 1})", f"N(x{m + 2})"]
        alts["printed-list"] = labels[:m] + [f"N(x{m + 1})^2+N(x{m})*N(x{m + 1})", f"N(x{m + 2})"] + hl
    else:
        top = norm_range(spec)
        head = [x1] + [norm(spec, j) for j in range(2, top + 1)]
        labels = ["x1"] + [f"N(x{j})" for j in range(2, top + 1)]
    return GeneratorList(spec, head + hs, labels + hl, hs, alts)


def printed_o_minus_pair(spec: GroupSpec) -> MultiPoly:
    """N(x_{m+1})^2 + N(x_m) N(x_{m+1}) as printed for even O-minus."""
    m = spec.m
    a, b = norm(spec, m + 1), norm(spec, m)
    return a * a + b * a
