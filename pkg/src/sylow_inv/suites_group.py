"""Suites that run per (family, m, q) grid point: group, invariance, norms, oracle."""
from __future__ import annotations

import itertools
import random

from . import families as fam
from . import groups as grp
from . import linalg as la
from .field import field_of_order, make_field, prime_power, trace_kernel
from .groups import GroupSpec
from .oracle import oracle_min_degree
from .poly import MultiPoly, act
from .report import Recorder, poly_witness, skip
from .steenrod import steenrod_op

SEED = 1729
S_COUNT_SAMPLES = 5


def spec_dict(spec: GroupSpec) -> dict:
    return {"family": spec.family, "m": spec.m, "q": spec.q}


def labelled_generators(spec: GroupSpec, full: bool = True):
    out = [(lab, g) for (lab, _), g in zip(grp.generator_params(spec), grp.g1_generators(spec))]
    L = grp.outer_involution(spec)
    if full and L is not None:
        out.append(("L", L))
    return out


def first_moving(gens, f: MultiPoly):
    """(label, g.f - f) for the first generator that moves f, else None."""
    for lab, g in gens:
        d = act(g, f) - f
        if d:
            return lab, d
    return None


# -- group suite ---------------------------------------------------------------

def suite_group(rec: Recorder, grid):
    for spec in grid:
        sd = spec_dict(spec)

        def sylow(spec=spec):
            N = grp.classical_order(spec)
            pp = grp.p_part(N, spec.p)
            return grp.group_order(spec) == pp, {"group_order": grp.group_order(spec), "p_part": pp,
                                                 "classical_order": N}

        rec.run(f"group.sylow[{spec.label()}]", sd, sylow)

        def generators_ok(spec=spec):
            for lab, g in labelled_generators(spec):
                if not (grp.preserves_form(spec, g) and grp.preserves_quadratic(spec, g)):
                    return False, {"generator": lab, "matrix": g}
                if lab != "L" and not grp.in_g1(spec, g):
                    return False, {"generator": lab, "matrix": g, "reason": "not in G1"}
            return True, {"count": len(labelled_generators(spec))}

        rec.run(f"group.generators[{spec.label()}]", sd, generators_ok)

        elems = {}

        def order(spec=spec):
            if grp.group_order(spec) > grp.caps().enum:
                skip(f"|G| = {grp.group_order(spec)} above the enumeration cap")
            els = grp.enumerate_group(spec)
            elems["all"] = els
            distinct = len(set(els))
            ok = len(els) == distinct == grp.group_order(spec)
            return ok, {"enumerated": len(els), "distinct": distinct, "group_order": grp.group_order(spec)}

        rec.run(f"group.order[{spec.label()}]", sd, order)

        def forms(spec=spec):
            if "all" not in elems:
                skip("group not enumerated")
            for M in elems["all"]:
                if not grp.preserves_form(spec, M):
                    return False, {"matrix": M, "reason": "form"}
                if not grp.preserves_quadratic(spec, M):
                    return False, {"matrix": M, "reason": "quadratic form"}
                if not grp.is_member(spec, M):
                    return False, {"matrix": M, "reason": "membership"}
            return True, {"checked": len(elems["all"])}

        rec.run(f"group.forms[{spec.label()}]", sd, forms)

        def closure(spec=spec):
            if "all" not in elems:
                skip("group not enumerated")
            got = grp.closure(spec.ctx, grp.generators(spec), n=spec.n)
            ok = got == set(elems["all"])
            return ok, {"closure_size": len(got), "enumerated": len(elems["all"])}

        rec.run(f"group.closure[{spec.label()}]", sd, closure)

        def middle(spec=spec):
            rep = grp.middle_block_report(spec)
            ok = all(F in rep["scan"] for F in rep["used"]) and rep["used"]
            return bool(ok), rep

        rec.run(f"group.middle-block[{spec.label()}]", sd, middle)

        def s_count(spec=spec):
            if spec.n_blk > 2 or spec.n_blk == 0:
                skip("brute-force S count only for n_blk in {1, 2}")
            rng = random.Random(SEED + spec.m * 97 + spec.q)
            ctx, nb, l = spec.ctx, spec.n_blk, spec.l
            seen = []
            for _ in range(S_COUNT_SAMPLES):
                B = tuple(tuple(rng.randrange(ctx.r) for _ in range(nb)) for _ in range(l))
                a = grp.count_S_solutions(spec, B)
                b = grp.count_S_bruteforce(ctx, spec.eps, grp.middle_form(spec), B, spec.unitary)
                seen.append([a, b])
                if a != b:
                    return False, {"B": B, "closed_form": a, "brute_force": b}
            return True, {"counts": seen}

        rec.run(f"group.s-count[{spec.label()}]", sd, s_count)

    s_count_fields(rec)


def s_count_fields(rec: Recorder):
    """Closed-form S counts against exhaustive counts on GF(2), GF(3), GF(4)."""
    rng = random.Random(SEED)
    configs = []
    for r in (2, 3, 4):
        ctx = field_of_order(r)
        two = ctx.from_int(2)
        forms = {"sym-J2": (1, ((0, 1), (1, 0)), False),
                 "alt": (-1, ((0, 1), (ctx.neg(1), 0)), False),
                 "sym-diag": (1, ((two,),), False),
                 "sym-zero": (1, ((0,),), False)}
        if ctx.half is not None:
            forms["herm-J2"] = (1, ((0, 1), (1, 0)), True)
            forms["herm-1"] = (1, ((1,),), True)
        for name, (eps, X2, unitary) in forms.items():
            if ctx.p == 2 and name == "sym-diag":
                continue
            configs.append((ctx, name, eps, X2, unitary))
    for ctx, name, eps, X2, unitary in configs:
        for nb in (1, 2):
            samples = [tuple(tuple(rng.randrange(ctx.r) for _ in range(nb)) for _ in range(len(X2)))
                       for _ in range(S_COUNT_SAMPLES)]

            def check(ctx=ctx, eps=eps, X2=X2, unitary=unitary, samples=samples):
                out = []
                for B in samples:
                    a = grp.s_solution_count(ctx, eps, X2, B, unitary)
                    b = grp.count_S_bruteforce(ctx, eps, X2, B, unitary)
                    out.append([a, b])
                    if a != b:
                        return False, {"B": B, "closed_form": a, "brute_force": b}
                return True, {"counts": out}

            rec.run(f"group.s-count-field[GF({ctx.r}) {name} n_blk={nb}]",
                    {"field": ctx.r, "form": name, "n_blk": nb}, check)

    for r in (2, 4):
        ctx = field_of_order(r)
        for size in (1, 2, 3):
            rec.run(f"group.s-decomposition[GF({r}) size={size}]", {"field": r, "size": size},
                    lambda ctx=ctx, size=size: s_decomposition(ctx, size))

    # the solvability hypothesis: char 2, symmetric, diag(B^T X2 B) != 0
    for r in (2, 4):
        ctx = field_of_order(r)
        X2 = ((1, 0), (0, 0))

        def hyp(ctx=ctx, X2=X2):
            B = ((1, 0), (0, 0))
            brute = grp.count_S_bruteforce(ctx, 1, X2, B, False)
            try:
                grp.s_solution_count(ctx, 1, X2, B, False)
            except grp.HypothesisHViolated:
                return brute == 0, {"brute_force": brute, "closed_form": "HypothesisHViolated"}
            return False, {"brute_force": brute, "closed_form": "no error raised"}

        rec.run(f"group.hypothesis-h[GF({r})]", {"field": r}, hyp)


def s_decomposition(ctx, k: int):
    """Every k x k S is S' + C with S' symmetric and C strictly upper, uniquely.

    Exhaustive: the sums over all pairs (S', C) hit every matrix exactly once.
    """
    R = range(ctx.r)
    upper = [(i, j) for i in range(k) for j in range(i + 1, k)]
    tri = [(i, j) for i in range(k) for j in range(i + 1)]
    seen = set()
    pairs = 0
    for sv in itertools.product(R, repeat=len(tri)):
        Sp = [[0] * k for _ in range(k)]
        for (i, j), v in zip(tri, sv):
            Sp[i][j] = Sp[j][i] = v
        for cv in itertools.product(R, repeat=len(upper)):
            M = [row[:] for row in Sp]
            for (i, j), v in zip(upper, cv):
                M[i][j] = ctx.add(M[i][j], v)
            seen.add(tuple(map(tuple, M)))
            pairs += 1
    total = ctx.r ** (k * k)
    return len(seen) == pairs == total, {"pairs": pairs, "distinct_sums": len(seen), "matrices": total}


# -- invariance suite ----------------------------------------------------------

def suite_invariance(rec: Recorder, grid):
    for spec in grid:
        sd = spec_dict(spec)
        gens = labelled_generators(spec)
        top = max(spec.m, fam.h_count(spec))
        prev = None
        for k in range(1, top + 1):
            hk = fam.h_poly(spec, k)

            def inv(hk=hk, gens=gens):
                moved = first_moving(gens, hk)
                if moved:
                    return False, {"generator": moved[0], "difference": poly_witness(moved[1])}
                return True, {"terms": len(hk), "generators": len(gens)}

            rec.run(f"invariance.h[{spec.label()} k={k}]", dict(sd, k=k), inv)
            if prev is not None:
                def chain(spec=spec, k=k, hk=hk, prev=prev):
                    idx = fam.h_chain_index(spec, k)
                    img = steenrod_op(prev, idx, spec.r)
                    return img == hk, ({"index": idx} if img == hk else
                                       {"index": idx, "steenrod_image": poly_witness(img), "h_k": poly_witness(hk)})

                rec.run(f"invariance.chain[{spec.label()} k={k}]", dict(sd, k=k), chain)
            prev = hk


# -- norms suite ---------------------------------------------------------------

SCAN_LIMIT = 2**18


def c_scan(ctx, t: int, sign: int, conj):
    """Every t x t matrix with c_ij = sign * conj(c_{t-j+1, t-i+1}).

    Exhaustive over all r^(t^2) matrices when that is at most SCAN_LIMIT;
    otherwise exhaustive per orbit of the position involution, which gives the
    same set because the constraint only links positions within an orbit.
    """
    sg = (lambda a: a) if sign == 1 else ctx.neg
    R = range(ctx.r)

    def ok(C):
        return all(C[i][j] == sg(conj(C[t - 1 - j][t - 1 - i])) for i in range(t) for j in range(t))

    if ctx.r ** (t * t) <= SCAN_LIMIT:
        out = []
        for flat in itertools.product(R, repeat=t * t):
            C = tuple(tuple(flat[i * t:(i + 1) * t]) for i in range(t))
            if ok(C):
                out.append(C)
        return out, "exhaustive"
    orbits, seen = [], set()
    for i in range(t):
        for j in range(t):
            if (i, j) in seen:
                continue
            orb = sorted({(i, j), (t - 1 - j, t - 1 - i)})
            seen.update(orb)
            orbits.append(orb)
    choices = []
    for orb in orbits:
        good = []
        for vals in itertools.product(R, repeat=len(orb)):
            val = dict(zip(orb, vals))
            if all(val[(i, j)] == sg(conj(val[(t - 1 - j, t - 1 - i)])) for (i, j) in orb):
                good.append(val)
        choices.append(good)
    out = []
    for combo in itertools.product(*choices):
        C = [[0] * t for _ in range(t)]
        for val in combo:
            for (i, j), v in val.items():
                C[i][j] = v
        out.append(tuple(tuple(r) for r in C))
    return out, "orbitwise"


def _field_kinds():
    """(label, ctx, q, conj, unitary) for F_q and F_(q^2) cases."""
    out = []
    for q in (2, 3, 4):
        out.append((f"F_{q}", field_of_order(q), q, lambda a: a, False))
    for q in (2, 3):
        ctx = field_of_order(q * q)
        out.append((f"F_{q}^2", ctx, q, ctx.conj, True))
    return out


def expected_antidiagonal(ctx, q, sign, unitary):
    if unitary:
        return set(ctx.fixed_field(ctx.half)) if sign == 1 else set(trace_kernel(ctx)[0])
    if sign == -1 and ctx.p != 2:
        return {0}
    return set(range(ctx.r))


def lk_claim(q, t, k, sign, unitary, p, zero_antidiag=False):
    if unitary:
        return q ** (2 * (t - k) + 1)
    if sign == -1 and (p != 2 or zero_antidiag):
        return q ** (t - k)
    return q ** (t - k + 1)


def lk_closed_form(ctx, q, t, k, d, sign, unitary, zero_antidiag=False):
    n = 2 * t + d
    r = q * q if unitary else q
    i = t + d + k
    F = fam.additive_poly(t - k, r, i, n, ctx)
    if not unitary and sign == -1 and (ctx.p != 2 or zero_antidiag):
        return F
    Fl = fam.additive_poly(t - k, r, t - k + 1, n, ctx)
    corr = Fl ** (q - 1) * F
    if unitary and sign == -1:
        return F**q + corr
    return F**q - corr


def _product_over_rows(ctx, rows, i, n, brute_limit=256):
    forms = []
    for row in rows:
        v = [0] * n
        v[: len(row)] = list(row)
        v[i - 1] = ctx.add(v[i - 1], 1)
        forms.append(tuple(v))
    start = tuple(1 if a == i - 1 else 0 for a in range(n))
    diffs = {tuple(ctx.sub(a, b) for a, b in zip(v, start)) for v in forms}
    nonzero = sorted(d for d in diffs if any(d))
    if not nonzero:
        return MultiPoly.var(ctx, n, i), None
    basis, span = fam._fp_span_basis(ctx, nonzero)
    fast = fam.additive_product(ctx, i, basis, n) if span == diffs else None
    brute = fam.product_of_forms(ctx, forms, n) if len(forms) <= brute_limit else None
    return fast, brute


def norms_fixed(rec: Recorder, t_max: int = 3, d: int = 2):
    for label, ctx, q, conj, unitary in _field_kinds():
        for sign in (1, -1):
            for t in range(1, t_max + 1):
                if unitary and q == 3 and t == 3:
                    continue  # 3^18 orbitwise products stay feasible but slow; t <= 2 here
                sp = {"field": label, "sign": sign, "t": t}
                cache = {}

                def lemma(ctx=ctx, q=q, conj=conj, unitary=unitary, sign=sign, t=t, cache=cache):
                    valid, method = c_scan(ctx, t, sign, conj)
                    cache["valid"] = valid
                    want = expected_antidiagonal(ctx, q, sign, unitary)
                    bad = []
                    for i in range(t):
                        for j in range(t):
                            vals = {C[i][j] for C in valid}
                            exp = want if j == t - 1 - i else set(range(ctx.r))
                            if vals != exp:
                                bad.append({"pos": [i + 1, j + 1], "values": sorted(vals), "expected": sorted(exp)})
                    return not bad, {"method": method, "count": len(valid), "bad": bad[:3]} if bad else {
                        "method": method, "count": len(valid)}

                rec.run(f"norms.c-entries[{label} sign={sign:+d} t={t}]", sp, lemma)
                variants = [False] + ([True] if sign == -1 and ctx.p == 2 and not unitary else [])
                for zero in variants:
                    for k in range(1, t + 1):
                        def lk(ctx=ctx, q=q, unitary=unitary, sign=sign, t=t, k=k, zero=zero, cache=cache):
                            if "valid" not in cache:
                                skip("C scan unavailable")
                            rows = set()
                            for C in cache["valid"]:
                                if zero and any(C[i][t - 1 - i] for i in range(t)):
                                    continue
                                if all(not any(C[i]) for i in range(k - 1)):
                                    rows.add(C[k - 1])
                            support_ok = all(not any(row[t - k + 1:]) for row in rows)
                            n = 2 * t + d
                            i = t + d + k
                            fast, brute = _product_over_rows(ctx, sorted(rows), i, n)
                            claim = lk_claim(q, t, k, sign, unitary, ctx.p, zero)
                            closed = lk_closed_form(ctx, q, t, k, d, sign, unitary, zero)
                            N = fast if fast is not None else brute
                            deg = N.degree_in(i)
                            ok = (support_ok and len(rows) == claim and deg == claim and N == closed
                                  and (brute is None or brute == N))
                            w = {"order": len(rows), "degree": deg, "claimed": claim,
                                 "brute_force_checked": brute is not None}
                            if not ok:
                                w.update(support_ok=support_ok, N=poly_witness(N), closed=poly_witness(closed))
                            return ok, w

                        tag = " zero-antidiagonal" if zero else ""
                        rec.run(f"norms.lk[{label} sign={sign:+d} t={t} k={k}{tag}]",
                                dict(sp, k=k, zero_antidiagonal=zero), lk)

    # orbit products over F_(q^2) with the last coefficient in F_q or in ker(trace)
    for q in (2, 3):
        ctx = field_of_order(q * q)
        sub = ctx.fixed_field(ctx.half)
        ker = trace_kernel(ctx)[0]
        for l in (1, 2):
            for which, last in (("subfield", sub), ("trace-kernel", ker)):
                def closed(ctx=ctx, q=q, l=l, which=which, last=last):
                    n = l + 1
                    i = l + 1
                    forms = []
                    for coeffs in itertools.product(range(ctx.r), repeat=l - 1):
                        for a in last:
                            v = list(coeffs) + [a, 1]
                            forms.append(tuple(v))
                    brute = fam.product_of_forms(ctx, forms, n)
                    F = fam.additive_poly(l - 1, q * q, i, n, ctx)
                    Fl = fam.additive_poly(l - 1, q * q, l, n, ctx)
                    corr = Fl ** (q - 1) * F
                    want = F**q - corr if which == "subfield" else F**q + corr
                    deg = brute.degree()
                    ok = brute == want and deg == q ** (2 * l - 1) and brute.is_homogeneous()
                    return ok, {"degree": deg} if ok else {"brute": poly_witness(brute), "closed": poly_witness(want)}

                rec.run(f"norms.closed-form[q={q} l={l} {which}]", {"q": q, "l": l, "last": which}, closed)


def suite_norms(rec: Recorder, grid, fixed: bool = True):
    for spec in grid:
        sd = spec_dict(spec)
        gens = grp.g1_generators(spec)
        for j in range(2, fam.norm_range(spec) + 1):
            def norm_check(spec=spec, j=j, gens=gens):
                orb = fam.orbit(spec.ctx, gens, j, spec.n)
                N = fam.norm(spec, j)
                want = fam.expected_norm_degree(spec, j)
                ok = N.degree_in(j) == want == len(orb) and N.max_var() <= j
                w = {"degree": N.degree_in(j), "expected": want, "orbit": len(orb)}
                if len(orb) <= 256:
                    brute = fam.orbit_product_bruteforce(spec.ctx, gens, j, spec.n)
                    w["brute_force_checked"] = True
                    ok = ok and brute == N
                moved = first_moving(list(zip(itertools.repeat("G1"), gens)), N)
                if moved:
                    ok = False
                    w["moved_by"] = poly_witness(moved[1])
                return ok, w

            rec.run(f"norms.orbit-product[{spec.label()} j={j}]", dict(sd, j=j), norm_check)
        if spec.unitary:
            def unitary_closed(spec=spec):
                t, q, n = spec.n_blk, spec.q, spec.n
                r = spec.r
                if spec.family == "gu-odd":
                    i = t + 1
                    want = fam.additive_poly(t, r, i, n, spec.ctx)
                else:
                    i = t + 2
                    F = fam.additive_poly(t, r, i, n, spec.ctx)
                    Fl = fam.additive_poly(t, r, t + 1, n, spec.ctx)
                    want = F**q + Fl ** (q - 1) * F
                got = fam.norm(spec, i)
                return got == want, {"j": i} if got == want else {"norm": poly_witness(got), "closed": poly_witness(want)}

            rec.run(f"norms.unitary-middle[{spec.label()}]", sd, unitary_closed)
    if fixed:
        norms_fixed(rec)


# -- oracle suite --------------------------------------------------------------

def suite_oracle(rec: Recorder, grid):
    ctx2 = field_of_order(2)
    U = [((1, 0), (1, 1))]
    rec.run("oracle.example[U(2,2) j=2 D=2]", {"q": 2, "n": 2, "j": 2, "D": 2},
            lambda: ((v := oracle_min_degree(ctx2, U, 2, 2, 2)) == 2, {"min_degree": v}))
    rec.run("oracle.example[U(2,2) j=1 D=2]", {"q": 2, "n": 2, "j": 1, "D": 2},
            lambda: ((v := oracle_min_degree(ctx2, U, 1, 2, 2)) == 1, {"min_degree": v}))
    for spec in grid:
        sd = spec_dict(spec)
        t, d = fam.h_range_params(spec)
        gens = grp.g1_generators(spec)
        for k in range(1, t + 1):
            j = t + d + k

            def h_range(spec=spec, j=j, k=k, gens=gens):
                phi = fam.chain_phi(spec, j)
                D = phi.degree()
                got = oracle_min_degree(spec.ctx, gens, j, D, spec.n)
                bound = fam.minimal_degree_bound(spec, k)
                return got == bound, {"min_degree": got, "bound": bound, "D": D,
                                      "scope": "total degree <= deg phi_j"}

            rec.run(f"oracle.h-range[{spec.label()} j={j}]", dict(sd, j=j), h_range)
        for j in range(2, fam.norm_range(spec) + 1):
            def norm_range(spec=spec, j=j, gens=gens):
                D = fam.norm(spec, j).degree()
                got = oracle_min_degree(spec.ctx, gens, j, D, spec.n)
                want = fam.expected_norm_degree(spec, j)
                return got == want, {"min_degree": got, "norm_degree": want, "D": D}

            rec.run(f"oracle.norm-range[{spec.label()} j={j}]", dict(sd, j=j), norm_range)


def default_spec_grid(points) -> list[GroupSpec]:
    return [GroupSpec(g.family, g.m, g.q) for g in points]


__all__ = ["suite_group", "suite_invariance", "suite_norms", "suite_oracle", "c_scan",
           "labelled_generators", "spec_dict", "make_field", "prime_power", "la"]
