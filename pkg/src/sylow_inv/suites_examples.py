"""The two worked examples in dimension 8 at q = 2: GU(8) and O+(8)."""
from __future__ import annotations

import itertools

from . import families as fam
from . import groups as grp
from . import linalg as la
from .certificates import certificate_field_generation
from .groups import ElementParams, GroupSpec
from .poly import MultiPoly
from .report import poly_witness

GU8 = GroupSpec("gu-even", 4, 2)
OP8 = GroupSpec("o-plus", 4, 2)


def displayed_h(spec: GroupSpec, exps) -> MultiPoly:
    """sum_i x_{n-i+1}^a x_i^b + x_{n-i+1}^b x_i^a over i = 1..4 (the term list as typeset)."""
    ctx, n = spec.ctx, spec.n
    out = MultiPoly.zero(ctx, n)
    X = MultiPoly.gens(ctx, n)
    for i in range(1, 5):
        for a, b in exps:
            out = out + X[n - i] ** a * X[i - 1] ** b
    return out


def h_subgroup(spec: GroupSpec):
    """Elements of H: A = I, B = 0, F = I, S free subject to its constraint."""
    nb, l = spec.n_blk, spec.l
    lower_pos = [(i, j) for i in range(nb) for j in range(i)]
    out = []
    for vals in itertools.product(range(spec.ctx.r), repeat=len(lower_pos)):
        low = [[0] * nb for _ in range(nb)]
        for (i, j), v in zip(lower_pos, vals):
            low[i][j] = v
        low = tuple(tuple(r) for r in low)
        for diag in itertools.product(grp.diag_choices(spec), repeat=nb):
            P = ElementParams(la.identity(nb), la.zeros(l, nb), la.identity(l), low, diag)
            out.append(grp.element(spec, P))
    return out


def c_block(spec: GroupSpec, M):
    nb, l = spec.n_blk, spec.l
    return tuple(tuple(M[nb + l + i][j] for j in range(nb)) for i in range(nb))


def lk_orders(spec: GroupSpec):
    H = h_subgroup(spec)
    Cs = [c_block(spec, M) for M in H]
    out = []
    for k in range(1, spec.n_blk + 1):
        rows = {C[k - 1] for C in Cs if all(not any(C[i]) for i in range(k - 1))}
        out.append(len(rows))
    return out, H


def suite_examples(rec, grid=None):
    spec = GU8
    q = spec.q
    sd = {"family": spec.family, "m": spec.m, "q": q, "n": spec.n}

    def labels():
        got = fam.field_generators(spec).labels
        want = ["x1", "N(x2)", "N(x3)", "N(x4)", "N(x5)", "h_1", "h_2", "h_3"]
        return got == want, {"labels": got}

    rec.run("examples.gu8.labels", sd, labels)

    def h_display():
        bad = []
        for k, e in ((1, q), (2, q**3), (3, q**5)):
            want = displayed_h(spec, ((e, 1), (1, e)))
            got = fam.h_poly(spec, k)
            if got != want:
                bad.append({"k": k, "h": poly_witness(got), "displayed": poly_witness(want)})
        return not bad, {"bad": bad} if bad else {"h_1": fam.h_poly(spec, 1).to_str()}

    rec.run("examples.gu8.h-display", sd, h_display)

    def h_invariant():
        gens = grp.generators(spec)
        from .poly import act
        moved = [k for k in (1, 2, 3) for g in gens if act(g, fam.h_poly(spec, k)) != fam.h_poly(spec, k)]
        return not moved, {"moved": sorted(set(moved))} if moved else {"generators": len(gens)}

    rec.run("examples.gu8.h-invariance", sd, h_invariant)

    def norm_degrees():
        degs = [1] + [fam.norm(spec, j).degree_in(j) for j in range(2, 6)]
        want = [1, q**2, q**4, q**6, q**7]
        # |U| from the parameter count of A, B and F
        nb, l, r = spec.n_blk, spec.l, spec.r
        u = r ** (nb * (nb - 1) // 2) * r ** (nb * l) * len(grp.allowed_middle(spec))
        prod = 1
        for d in degs:
            prod *= d
        ok = degs == want and prod == u == q**19
        return ok, {"degrees": degs, "product": prod, "U_order": u}

    rec.run("examples.gu8.norm-degrees", sd, norm_degrees)

    def psi_norms():
        bad = []
        for k in range(2, spec.n_blk + 2):
            lhs = fam.psi_map(k - 1, spec.r, spec.n, spec.ctx)(MultiPoly.var(spec.ctx, spec.n, k))
            if lhs != fam.norm(spec, k):
                bad.append(k)
        return not bad, {"bad_k": bad} if bad else {"k": list(range(2, spec.n_blk + 2))}

    rec.run("examples.gu8.psi-norms", sd, psi_norms)

    def lk():
        orders, H = lk_orders(spec)
        want = [q ** (7 - 2 * k) for k in (1, 2, 3)]
        members = all(grp.is_member(spec, M) for M in H)
        ok = orders == want and members and len(H) == q**9
        return ok, {"orders": orders, "expected": want, "H_order": len(H), "members": members}

    rec.run("examples.gu8.lk-orders", sd, lk)

    def phi_degrees():
        degs = [fam.chain_phi(spec, j).degree_in(j) for j in (6, 7, 8)]
        ok = degs == [32, 8, 2] and fam.chain_phi(spec, 8) == fam.h_poly(spec, 1)
        return ok, {"degrees": degs}

    rec.run("examples.gu8.phi-degrees", sd, phi_degrees)

    def order():
        return grp.group_order(spec) == q**28 == q**19 * 32 * 8 * 2, {"order": grp.group_order(spec)}

    rec.run("examples.gu8.order", sd, order)

    def cert():
        c = certificate_field_generation(spec)
        return c.verdict, {"phis": c.phis, "degrees": [r.deg for r in c.records]}

    rec.run("examples.gu8.certificate", sd, cert)

    # O+(8)
    spec = OP8
    sd = {"family": spec.family, "m": spec.m, "q": q, "n": spec.n}

    def middle():
        return grp.allowed_middle(spec) == [la.identity(2)], {"F": grp.allowed_middle(spec)}

    rec.run("examples.o8.middle-identity", sd, middle)

    def s_rule():
        # S + S^T = B^T J2 B with s_ii = b_1i b_2i, for every B (A = I)
        bad = None
        for flat in itertools.product(range(spec.ctx.r), repeat=2 * spec.n_blk):
            B = (tuple(flat[:3]), tuple(flat[3:]))
            S = grp.solve_s(spec, B, la.zeros(3, 3), (0, 0, 0))
            lhs = la.madd(spec.ctx, S, la.transpose(S))
            rhs = la.matprod(spec.ctx, la.transpose(B), grp.J(2), B)
            diag_ok = all(S[i][i] == spec.ctx.mul(B[0][i], B[1][i]) for i in range(3))
            if lhs != rhs or not diag_ok:
                bad = {"B": B, "S": S}
                break
        return bad is None, bad or {"B_checked": spec.ctx.r ** 6}

    rec.run("examples.o8.s-rule", sd, s_rule)

    def swap():
        from .poly import act
        L = grp.outer_involution(spec)
        a, b = fam.norm(spec, 4), fam.norm(spec, 5)
        fixed = [MultiPoly.var(spec.ctx, 8, 1), fam.norm(spec, 2), fam.norm(spec, 3)] + [
            fam.h_poly(spec, k) for k in (1, 2, 3)]
        ok = (act(L, a) == b and act(L, b) == a and all(act(L, f) == f for f in fixed)
              and la.matmul(spec.ctx, L, L) == la.identity(8))
        return ok, {"swap": [act(L, a) == b, act(L, b) == a]}

    rec.run("examples.o8.l-swap", sd, swap)

    def listing():
        gl = fam.field_generators(spec)
        want = ["x1", "N(x2)", "N(x3)", "N(x4)+N(x5)", "N(x4)*N(x5)", "h_1", "h_2", "h_3"]
        hs = [MultiPoly.gens(spec.ctx, 8)[8 - i] * MultiPoly.gens(spec.ctx, 8)[i - 1] for i in range(1, 5)]
        h1 = hs[0] + hs[1] + hs[2] + hs[3]
        disp = [h1, displayed_h(spec, ((q, 1), (1, q))), displayed_h(spec, ((q * q, 1), (1, q * q)))]
        ok = gl.labels == want and all(fam.h_poly(spec, k) == disp[k - 1] for k in (1, 2, 3))
        return ok, {"labels": gl.labels}

    rec.run("examples.o8.list", sd, listing)

    def cert():
        c = certificate_field_generation(spec)
        return c.verdict, {"phis": c.phis, "degrees": [r.deg for r in c.records],
                           "outer_ok": c.checks["outer"]["ok"]}

    rec.run("examples.o8.certificate", sd, cert)
