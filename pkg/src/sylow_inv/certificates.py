"""Field-generation certificates.

The certificate for G1 is a chain phi_1..phi_n with phi_j in F[x1..xj]
invariant under G1.  If the x_j-degrees multiply to |G1| then
F(x)^G1 = F(phi_1..phi_n).  For even O+- the outer element L permutes the
chain, and the remaining step is the invariant field of Sigma_2 acting on
two of its members.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from . import families as fam
from . import groups as grp
from . import linalg as la
from .field import field_of_order
from .groups import GroupSpec
from .oracle import graded_invariant_dims
from .poly import MultiPoly, act
from .report import poly_witness


def partial(f: MultiPoly, i: int) -> MultiPoly:
    """d f / d x_i."""
    ctx = f.ctx
    out = {}
    for e, c in f.terms.items():
        a = e[i - 1]
        k = ctx.from_int(a)
        if not k:
            continue
        e2 = list(e)
        e2[i - 1] -= 1
        out[tuple(e2)] = ctx.mul(c, k)
    return MultiPoly(ctx, f.n, out)


@dataclass
class PhiRecord:
    j: int
    label: str
    in_R: bool
    invariant: bool
    deg: int
    bound: int
    met: bool

    def ok(self):
        return self.in_R and self.invariant and self.met


@dataclass
class Certificate:
    spec: dict
    phis: list
    records: list
    checks: dict = field(default_factory=dict)
    verdict: bool = False

    def to_json(self) -> dict:
        return {"spec": self.spec, "phis": self.phis,
                "records": [vars(r) for r in self.records],
                "checks": self.checks, "verdict": self.verdict}


def chain_label(spec: GroupSpec, j: int) -> str:
    if j == 1:
        return "x1"
    if j <= fam.norm_range(spec):
        return f"N(x{j})"
    l = spec.n - j
    return "h_1" if l == 0 else f"psi_{l}(h_1)"


def chain_claim(spec: GroupSpec, j: int) -> int:
    if j == 1:
        return 1
    if j <= fam.norm_range(spec):
        return fam.expected_norm_degree(spec, j)
    t, d = fam.h_range_params(spec)
    return fam.minimal_degree_bound(spec, j - t - d)


def _moved(gens, f):
    return next((g for g in gens if act(g, f) != f), None)


def sigma2_checks(ctx, which: str) -> dict:
    """The invariant field of Sigma_2 on F(X, Y) for a swap or a shear.

    swap:  X <-> Y, generators X + Y and X Y
    shear: Y -> X + Y (char 2), generators X and Y^2 + X Y
    """
    X, Y = MultiPoly.var(ctx, 2, 1), MultiPoly.var(ctx, 2, 2)
    if which == "swap":
        g = ((0, 1), (1, 0))
        u, v = X + Y, X * Y
    else:
        g = ((1, 0), (1, 1))
        u, v = X, Y * Y + X * Y
    invariant = act(g, u) == u and act(g, v) == v
    jac = partial(u, 1) * partial(v, 2) - partial(u, 2) * partial(v, 1)
    # [F(X,Y):F(u,v)] = 2: u, v are algebraically independent and the graded
    # invariants of <g> agree with F[u, v] (weights deg u, deg v) up to degree 6
    D = 6
    have = graded_invariant_dims(ctx, [g], 2, D)
    du, dv = u.degree(), v.degree()
    want = [sum(1 for a in range(d // du + 1) if (d - a * du) % dv == 0) for d in range(D + 1)]
    order2 = la.matmul(ctx, g, g) == la.identity(2)
    ok = invariant and bool(jac) and order2 and have == want and du * dv == 2
    return {"group": which, "u": u.to_str(), "v": v.to_str(), "invariant": invariant,
            "jacobian": jac.to_str(), "hilbert": have, "expected_hilbert": want,
            "degree_product": du * dv, "ok": ok}


def _inverse(ctx, g):
    n = len(g)
    acc, prev = g, la.identity(n)
    while acc != la.identity(n):
        prev, acc = acc, la.matmul(ctx, acc, g)
    return prev


def outer_checks(spec: GroupSpec) -> dict:
    """L normalises G1, has order 2, and acts on the chain as the Sigma_2 table says."""
    ctx, m = spec.ctx, spec.m
    L = grp.outer_involution(spec)
    Linv = _inverse(ctx, L)
    out = {"order_two": la.matmul(ctx, L, L) == la.identity(spec.n),
           "in_group": grp.preserves_form(spec, L) and grp.preserves_quadratic(spec, L),
           "outside_G1": not grp.in_g1(spec, L)}
    out["normalises_G1"] = all(grp.in_g1(spec, la.matprod(ctx, L, g, Linv)) for g in grp.g1_generators(spec))
    if spec.family == "o-plus":
        a, b = fam.norm(spec, m), fam.norm(spec, m + 1)
        out["table"] = {"L(N(x_m)) = N(x_m+1)": act(L, a) == b, "L(N(x_m+1)) = N(x_m)": act(L, b) == a}
        sig = "swap"
        fixed = [j for j in range(1, spec.n + 1) if j not in (m, m + 1)]
    else:
        a, b = fam.norm(spec, m + 1), fam.norm(spec, m + 2)
        out["table"] = {"L(N(x_m+1)) = N(x_m+1) + N(x_m+2)": act(L, a) == a + b,
                        "L(N(x_m+2)) = N(x_m+2)": act(L, b) == b}
        sig = "shear"
        fixed = [j for j in range(1, spec.n + 1) if j not in (m + 1, m + 2)]
    out["fixes_rest"] = all(act(L, fam.chain_phi(spec, j)) == fam.chain_phi(spec, j) for j in fixed)
    out["sigma2"] = sigma2_checks(ctx, sig)
    out["ok"] = (out["order_two"] and out["in_group"] and out["outside_G1"] and out["normalises_G1"]
                 and all(out["table"].values()) and out["fixes_rest"] and out["sigma2"]["ok"])
    return out


def certificate_field_generation(spec: GroupSpec) -> Certificate:
    n, ctx = spec.n, spec.ctx
    g1 = grp.g1_generators(spec)
    records, phis = [], []
    for j in range(1, n + 1):
        phi = fam.chain_phi(spec, j)
        deg = phi.degree_in(j)
        claim = chain_claim(spec, j)
        rec = PhiRecord(j, chain_label(spec, j), phi.max_var() <= j and deg > 0,
                        _moved(g1, phi) is None, deg, claim, deg == claim)
        records.append(rec)
        phis.append(rec.label)
    degs = [r.deg for r in records]
    checks = {"degree_product": prod(degs), "g1_order": grp.g1_order(spec)}
    checks["product_matches"] = checks["degree_product"] == checks["g1_order"]

    # the stated list: right length, invariant under the whole group
    gl = fam.field_generators(spec)
    full = grp.generators(spec)
    moved = [lab for lab, f in zip(gl.labels, gl.phis) if _moved(full, f) is not None]
    checks["list"] = {"labels": gl.labels, "length_ok": len(gl.phis) == n, "not_invariant": moved,
                      "alternatives": {k: {"labels": v, "length": len(v)} for k, v in sorted(gl.alternatives.items())}}

    # h chain under the Steenrod operations
    from .steenrod import steenrod_op
    chain_bad = []
    for k in range(2, fam.h_count(spec) + 1):
        idx = fam.h_chain_index(spec, k)
        if steenrod_op(fam.h_poly(spec, k - 1), idx, spec.r) != fam.h_poly(spec, k):
            chain_bad.append(k)
    checks["h_chain_failures"] = chain_bad
    # with an empty h-range (t = 0) the chain ends in an orbit product
    checks["h1_is_phi_n"] = (fam.norm_range(spec) == n
                             or fam.chain_phi(spec, n) == fam.h_poly(spec, 1))

    if spec.has_outer:
        checks["outer"] = outer_checks(spec)
    verdict = (all(r.ok() for r in records) and checks["product_matches"]
               and checks["list"]["length_ok"] and not moved and not chain_bad
               and checks["h1_is_phi_n"] and (not spec.has_outer or checks["outer"]["ok"]))
    return Certificate({"family": spec.family, "m": spec.m, "q": spec.q}, phis, records, checks, verdict)


def failed_parts(cert: Certificate) -> dict:
    """Compact witness for a failed certificate."""
    out = {"records": [vars(r) for r in cert.records if not r.ok()]}
    c = cert.checks
    if not c["product_matches"]:
        out["degree_product"] = [c["degree_product"], c["g1_order"]]
    if c["list"]["not_invariant"] or not c["list"]["length_ok"]:
        out["list"] = c["list"]
    if c["h_chain_failures"]:
        out["h_chain_failures"] = c["h_chain_failures"]
    if not c["h1_is_phi_n"]:
        out["h1_is_phi_n"] = False
    if "outer" in c and not c["outer"]["ok"]:
        out["outer"] = c["outer"]
    return out


def suite_certificates(rec, grid):
    for spec in grid:
        sd = {"family": spec.family, "m": spec.m, "q": spec.q}

        def run(spec=spec):
            cert = certificate_field_generation(spec)
            if cert.verdict:
                return True, {"phis": cert.phis, "degrees": [r.deg for r in cert.records]}
            return False, failed_parts(cert)

        rec.run(f"certificates.field[{spec.label()}]", sd, run)
    for r, which in ((2, "swap"), (3, "swap"), (2, "shear"), (4, "shear")):
        ctx = field_of_order(r)
        rec.run(f"certificates.sigma2[{which} GF({r})]", {"field": r, "group": which},
                lambda ctx=ctx, which=which: ((c := sigma2_checks(ctx, which))["ok"], c))


__all__ = ["certificate_field_generation", "sigma2_checks", "outer_checks", "suite_certificates",
           "Certificate", "PhiRecord", "poly_witness"]
