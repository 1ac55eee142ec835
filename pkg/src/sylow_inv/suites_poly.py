"""Identity suites for the polynomial families.

Three suites live here: ``steenrod`` (component tables and the total
operation P^bullet), ``psi`` (the maps psi_l, the additive polynomials and
the recursions for psi_l of each family) and ``degrees`` (variable support
and top degrees of psi_l images).  They run on a fixed small grid, not on the
group grid of the run config.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from . import families as fam
from .field import FieldElement, field_of_order, fp_basis, make_field, nonsquare_quadratic_param, prime_power
from .groups import GroupSpec
from .poly import MultiPoly, act
from .report import Recorder, poly_witness
from .steenrod import p_bullet, p_bullet_from_components, steenrod_expand

GRID_N = (4, 6)
FQ = (2, 3, 4)          # Omega and Gamma over GF(q), r = q
FQ_LAMBDA = (2, 3)      # Lambda over GF(q^2), r = q^2
S_MAX = 2
L_MAX = 2
SEED = 20240611


def lam_params(q: int, ctx) -> list[int]:
    """Codes of 0, 1 and the O-minus parameter a, all taken in F_q."""
    p, e = prime_power(q)
    a = nonsquare_quadratic_param(make_field(p, e))
    if ctx.r != q and e != 1:
        # a lives in the subfield; only prime q embeds by code
        return [0, 1]
    return sorted({0, 1, a})


@dataclass(frozen=True)
class FamilyCase:
    kind: str
    s: int
    param: int  # j for omega, a lambda code otherwise
    n: int
    q: int

    @property
    def ctx(self):
        p, e = prime_power(self.q)
        return make_field(p, 2 * e if self.kind == "lambda" else e)

    @property
    def r(self):
        return self.ctx.r

    def poly(self, s: int | None = None) -> MultiPoly:
        s = self.s if s is None else s
        ctx, n = self.ctx, self.n
        if s < 0 or (self.kind == "lambda" and s < 1):
            return MultiPoly.zero(ctx, n)
        if self.kind == "omega":
            return fam.omega(ctx, n, s, self.param)
        lam = FieldElement(ctx, self.param)  # a code, not an integer mod p
        if self.kind == "gamma":
            return fam.gamma(ctx, n, s, lam)
        return fam.lam_poly(ctx, n, s, lam)

    def label(self) -> str:
        sym = {"omega": "Omega", "gamma": "Gamma", "lambda": "Lambda"}[self.kind]
        par = f"j={self.param}" if self.kind == "omega" else f"lam={self.ctx.fmt(self.param)}"
        return f"{sym}_{self.s} {par} n={self.n} q={self.q}"

    def spec(self) -> dict:
        return {"kind": self.kind, "s": self.s, "param": self.param, "n": self.n,
                "q": self.q, "r": self.r}

    def is_zero(self) -> bool:
        return self.kind == "omega" and self.s == 0 and self.param == -1


def family_cases(ns=GRID_N, s_max=S_MAX, fq=FQ, fq_lambda=FQ_LAMBDA):
    for q in fq:
        ctx = field_of_order(q)
        for n in ns:
            for s in range(s_max + 1):
                for j in (1, -1):
                    yield FamilyCase("omega", s, j, n, q)
                for lam in lam_params(q, ctx):
                    yield FamilyCase("gamma", s, lam, n, q)
    for q in fq_lambda:
        p, e = prime_power(q)
        big = make_field(p, 2 * e)
        for n in ns:
            for s in range(1, s_max + 1):
                for lam in lam_params(q, big):
                    yield FamilyCase("lambda", s, lam, n, q)


# -- tables -------------------------------------------------------------------

def steenrod_table(case: FamilyCase, printed: bool = False) -> dict[int, MultiPoly]:
    """Nonzero Steenrod components of a family member, index -> polynomial.

    printed=True reproduces two items exactly as typeset, which fail: the
    factor 2 in P^1(Gamma_1) and the index s-1 in P^1(Lambda_s), s >= 2.
    """
    if case.is_zero():
        return {}
    F, s, r = case.poly, case.s, case.r
    if case.kind == "lambda":
        q = case.q
        e = q ** (2 * s - 1)
        if s == 1:
            p1 = F(1) ** q
        else:
            p1 = F(s) ** (q * q) if printed else F(s - 1) ** (q * q)
        entries = [(0, F(s)), (1, p1), (e, F(s + 1)), (e + 1, F(s) ** (q * q))]
    elif s == 0:
        entries = [(0, F(0)), (1, F(1)), (2, F(0) ** r)]
    else:
        if s == 1 and (case.kind == "gamma" or case.param == 1):
            twice = case.kind == "omega" or not printed
            p1 = F(0) ** r * (2 if twice else 1)
        else:
            p1 = F(s - 1) ** r
        entries = [(0, F(s)), (1, p1), (r**s, F(s + 1)), (r**s + 1, F(s) ** r)]
    table: dict[int, MultiPoly] = {}
    for i, g in entries:
        table[i] = table[i] + g if i in table else g
    return {i: g for i, g in table.items() if g}


def recursion_terms(case: FamilyCase):
    """(coef, T-exponent, family index, power) for the psi_l recursion.

    psi_l(f_s) = sum coef * T^texp * psi_{l-1}(f_index)^power with
    T = psi_{l-1}(x_l).  Dropping T gives P^bullet(f_s).
    """
    s, r = case.s, case.r
    if case.kind == "lambda":
        q = case.q
        qq = q * q
        if s == 1:
            return [(1, 0, 1, qq), (-1, qq - 1, 2, 1), (-1, q**3 - q, 1, q),
                    (1, q**3 + qq - q - 1, 1, 1)]
        e = q ** (2 * s - 1)
        return [(1, 0, s, qq), (-1, qq - 1, s + 1, 1), (-1, e * (qq - 1), s - 1, qq),
                (1, (e + 1) * (qq - 1), s, 1)]
    if s == 0:
        return [(1, 0, 0, r), (-1, r - 1, 1, 1), (1, 2 * (r - 1), 0, 1)]
    c = -2 if s == 1 and (case.kind == "gamma" or case.param == 1) else -1
    return [(1, 0, s, r), (-1, r - 1, s + 1, 1), (c, r**s * (r - 1), s - 1, r),
            (1, (r**s + 1) * (r - 1), s, 1)]


def bullet_rhs(case: FamilyCase) -> MultiPoly:
    out = MultiPoly.zero(case.ctx, case.n)
    for coef, _, idx, power in recursion_terms(case):
        out = out + (case.poly(idx) ** power) * coef
    return out


def psi_apply(case: FamilyCase, l: int, f: MultiPoly) -> MultiPoly:
    return fam.psi_map(l, case.r, case.n, case.ctx)(f)


def recursion_rhs(case: FamilyCase, l: int) -> MultiPoly:
    ctx, n, r = case.ctx, case.n, case.r
    T = fam.psi_images(ctx, l - 1, r, n)[l - 1]
    out = MultiPoly.zero(ctx, n)
    for coef, texp, idx, power in recursion_terms(case):
        g = psi_apply(case, l - 1, case.poly(idx))
        if not g:
            continue
        out = out + (T**texp) * (g**power) * coef
    return out


def symbolic_expansion(case: FamilyCase, l: int):
    """psi_l(f_s) as a polynomial in y_1..y_l (y_k = psi_{k-1}(x_k)) and z_i (= f_i).

    Returns (expression, ring layout) where layout maps symbol positions to
    ('y', k) or ('z', i).  Built from the recursion alone.
    """
    ctx = case.ctx
    lo, hi = case.s - l, case.s + l
    zs = list(range(lo, hi + 1))
    layout = [("y", k) for k in range(1, l + 1)] + [("z", i) for i in zs]
    N = len(layout)
    pos = {sym: k for k, sym in enumerate(layout)}
    memo = {}

    def E(level, s):
        key = (level, s)
        if key in memo:
            return memo[key]
        if level == 0:
            out = MultiPoly.var(ctx, N, pos[("z", s)] + 1)
        else:
            sub = FamilyCase(case.kind, s, case.param, case.n, case.q)
            if sub.is_zero() or (case.kind == "lambda" and s < 1) or s < 0:
                out = MultiPoly.zero(ctx, N)
            else:
                y = MultiPoly.var(ctx, N, pos[("y", level)] + 1)
                out = MultiPoly.zero(ctx, N)
                for coef, texp, idx, power in recursion_terms(sub):
                    if idx < 0 or (case.kind == "lambda" and idx < 1):
                        continue
                    out = out + (y**texp) * (E(level - 1, idx) ** power) * coef
        memo[key] = out
        return out

    return E(l, case.s), layout


# -- steenrod suite ------------------------------------------------------------

def suite_steenrod(rec: Recorder, cases=None):
    cases = list(family_cases()) if cases is None else cases
    for case in cases:
        f = case.poly()

        def table_check(case=case, f=f):
            comps = steenrod_expand(f, case.r)
            table = steenrod_table(case)
            bad = []
            for i in range(max(len(comps), max(table, default=0) + 1)):
                got = comps[i] if i < len(comps) else MultiPoly.zero(case.ctx, case.n)
                want = table.get(i, MultiPoly.zero(case.ctx, case.n))
                if got != want:
                    bad.append({"index": i, "got": poly_witness(got), "want": poly_witness(want)})
            nz = [i for i, c in enumerate(comps) if c]
            return not bad, ({"mismatch": bad[:3]} if bad else {"nonzero_components": nz})

        rec.run(f"steenrod.table[{case.label()}]", case.spec(), table_check)

        def bullet_check(case=case, f=f):
            direct = p_bullet(f, case.r)
            alt = p_bullet_from_components(f, case.r)
            rhs = MultiPoly.zero(case.ctx, case.n) if case.is_zero() else bullet_rhs(case)
            ok = direct == alt == rhs
            w = None if ok else {"substitution": poly_witness(direct), "alternating": poly_witness(alt),
                                 "closed_form": poly_witness(rhs)}
            return ok, w

        rec.run(f"steenrod.bullet[{case.label()}]", case.spec(), bullet_check)

        printed = steenrod_table(case, printed=True)
        if printed != steenrod_table(case):
            comps = steenrod_expand(f, case.r)
            holds = all((comps[i] if i < len(comps) else MultiPoly.zero(case.ctx, case.n))
                        == printed.get(i, MultiPoly.zero(case.ctx, case.n))
                        for i in range(max(len(comps), max(printed) + 1)))
            rec.note(kind="printed-steenrod-item", case=case.label(), printed_item_holds=holds)


# -- psi suite -----------------------------------------------------------------

def _contexts():
    """(ctx, r) pairs: GF(q) with r = q, and GF(q^2) with r = q^2."""
    out = [(field_of_order(q), q) for q in FQ]
    for q in FQ_LAMBDA:
        big = field_of_order(q * q)
        out.append((big, q * q))
    return out


def unitriangular_gens(ctx, n):
    basis = fp_basis(ctx, range(ctx.r))
    gens = []
    for i in range(n):
        for j in range(i):
            for v in basis:
                M = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
                M[i][j] = v
                gens.append(tuple(tuple(row) for row in M))
    return gens


def random_unitriangular(ctx, n, rng):
    return tuple(tuple(1 if a == b else (rng.randrange(ctx.r) if b < a else 0) for b in range(n))
                 for a in range(n))


def random_poly(ctx, n, rng, terms=3, max_deg=3):
    out = {}
    for _ in range(terms):
        e = [0] * n
        for _ in range(rng.randint(1, max_deg)):
            e[rng.randrange(n)] += 1
        out[tuple(e)] = rng.randrange(1, ctx.r)
    return MultiPoly(ctx, n, out)


def suite_psi(rec: Recorder, cases=None, ns=GRID_N, l_max=L_MAX):
    rng = random.Random(SEED)
    for ctx, r in _contexts():
        for n in ns:
            for l in range(0, l_max + 1):
                spec = {"field": ctx.r, "r": r, "n": n, "l": l}

                def kills(ctx=ctx, r=r, n=n, l=l):
                    imgs = fam.psi_images(ctx, l, r, n)
                    bad = [k for k in range(1, l + 1) if imgs[k - 1]]
                    if l == 0:
                        bad += [k for k in range(1, n + 1) if imgs[k - 1] != MultiPoly.var(ctx, n, k)]
                    return not bad, ({"nonzero_at": bad} if bad else None)

                rec.run(f"psi.kills[r={r} n={n} l={l}]", spec, kills)
                if l == 0:
                    continue
                forms = [[rng.randrange(ctx.r) for _ in range(n)] for _ in range(3)]

                def linear(ctx=ctx, r=r, n=n, l=l, forms=forms):
                    T = fam.psi_images(ctx, l - 1, r, n)[l - 1]
                    for vec in forms:
                        f = MultiPoly.linear(ctx, vec)
                        prev = fam.psi_map(l - 1, r, n, ctx)(f)
                        lhs = fam.psi_map(l, r, n, ctx)(f)
                        rhs = prev**r - T ** (r - 1) * prev
                        if lhs != rhs:
                            return False, {"form": vec, "lhs": poly_witness(lhs), "rhs": poly_witness(rhs)}
                    return True, None

                rec.run(f"psi.linear[r={r} n={n} l={l}]", spec, linear)
                g = random_unitriangular(ctx, n, rng)
                fs = [random_poly(ctx, n, rng) for _ in range(2)]

                def commute(ctx=ctx, r=r, n=n, l=l, g=g, fs=fs):
                    psi = fam.psi_map(l, r, n, ctx)
                    for f in fs:
                        a, b = act(g, psi(f)), psi(act(g, f))
                        if a != b:
                            return False, {"g": g, "f": poly_witness(f), "g_after_psi": poly_witness(a),
                                           "psi_after_g": poly_witness(b)}
                    return True, None

                rec.run(f"psi.commute[r={r} n={n} l={l}]", spec, commute)

    # orbit products under the full unitriangular group, tiny n and r
    for r in (2, 3, 4):
        ctx = field_of_order(r)
        for n in (2, 3):
            gens = unitriangular_gens(ctx, n)
            for l in range(0, n):
                def orbit_check(ctx=ctx, r=r, n=n, l=l, gens=gens):
                    lhs = fam.psi_images(ctx, l, r, n)[l]
                    rhs = fam.orbit_product_bruteforce(ctx, gens, l + 1, n)
                    return lhs == rhs, (None if lhs == rhs else {"psi": poly_witness(lhs),
                                                                  "orbit_product": poly_witness(rhs)})

                rec.run(f"psi.orbit[r={r} n={n} l={l}]", {"r": r, "n": n, "l": l}, orbit_check)

    # additive polynomials: recursion against the product over the span
    for r in (2, 3, 4):
        ctx = field_of_order(r)
        for l in (1, 2):
            def additive(ctx=ctx, r=r, l=l):
                rec_ = fam.additive_poly(l, r, l + 1, l + 1, ctx)
                brute = fam.additive_poly_bruteforce(l, r, l + 1, l + 1, ctx)
                d1 = fam.dickson_coeffs(l, r, ctx)
                d2 = fam.dickson_coeffs_recursive(l, r, ctx)
                ok = rec_ == brute and d1 == d2
                return ok, {"F": poly_witness(rec_)} if ok else {
                    "recursion": poly_witness(rec_), "product": poly_witness(brute)}

            rec.run(f"psi.additive[r={r} l={l}]", {"r": r, "l": l}, additive)

    for q in (2, 3):
        ctx = field_of_order(q)

        def dickson_inv(ctx=ctx, q=q):
            cs = fam.dickson_coeffs(2, q, ctx)
            for _ in range(3):
                while True:
                    M = tuple(tuple(rng.randrange(q) for _ in range(2)) for _ in range(2))
                    if ctx.sub(ctx.mul(M[0][0], M[1][1]), ctx.mul(M[0][1], M[1][0])):
                        break
                for i, c in enumerate(cs):
                    if act(M, c) != c:
                        return False, {"M": M, "i": i, "c": poly_witness(c)}
            return True, {"c": [poly_witness(c) for c in cs]}

        rec.run(f"psi.dickson-invariance[q={q}]", {"q": q, "n": 2}, dickson_inv)

    # recursions for psi_l of each family, and the structural expansion
    cases = list(family_cases()) if cases is None else cases
    for case in cases:
        if case.is_zero():
            continue
        for l in range(1, l_max + 1):
            spec = dict(case.spec(), l=l)

            def recursion(case=case, l=l):
                lhs = psi_apply(case, l, case.poly())
                rhs = recursion_rhs(case, l)
                return lhs == rhs, (None if lhs == rhs else {"lhs": poly_witness(lhs), "rhs": poly_witness(rhs)})

            rec.run(f"psi.recursion[{case.label()} l={l}]", spec, recursion)

            def expansion(case=case, l=l):
                expr, layout = symbolic_expansion(case, l)
                ctx, n, r = case.ctx, case.n, case.r
                images = []
                for kind, k in layout:
                    if kind == "y":
                        images.append(fam.psi_images(ctx, k - 1, r, n)[k - 1])
                    else:
                        images.append(case.poly(k))
                used = sorted({layout[i][1] for e in expr.terms for i, a in enumerate(e)
                               if a and layout[i][0] == "z" and case.poly(layout[i][1])})
                value = expr.substitute(images)
                direct = psi_apply(case, l, case.poly())
                ok = value == direct
                w = {"family_indices_used": used,
                     "printed_range": [case.s - 1, case.s + l]}
                if not ok:
                    w.update(expansion=poly_witness(value), direct=poly_witness(direct))
                return ok, w

            rec.run(f"psi.expansion[{case.label()} l={l}]", spec, expansion)


# -- degree suite --------------------------------------------------------------

def expected_psi_degree(case: FamilyCase, l: int):
    """(claimed degree of psi_l(f) in x_{n-l}, in_scope flag, derived degree)."""
    n, s, r = case.n, case.s, case.r
    m = n // 2
    if case.kind == "lambda":
        q = case.q
        claim = q ** (2 * l + 2 * s - 1)
        tail_vars = [m + 1] if case.param else []
        tail_deg = r**l * (q ** (2 * s - 1) + 1)
    else:
        claim = r ** (l + s)
        tail_vars = []
        if case.kind == "gamma":
            c = (n + 1) // 2
            live = s == 0 or case.ctx.p != 2
            if live:
                tail_vars = [c] + ([c + 1] if case.param else [])
        tail_deg = r**l * (2 if s == 0 else r**s + 1)
    in_scope = (n - l) not in tail_vars
    return claim, in_scope, (claim if in_scope else max(claim, tail_deg))


def suite_degrees(rec: Recorder, ns=(4, 5, 6), l_max=L_MAX):
    cases = [c for c in family_cases(ns=ns) if not c.is_zero()]
    cases += [c for c in family_cases(ns=(8,), fq=(2,), fq_lambda=(2,)) if not c.is_zero()]
    for case in cases:
        m = case.n // 2
        for l in range(0, min(m - 1, l_max) + 1):
            spec = dict(case.spec(), l=l)

            def degree(case=case, l=l):
                g = psi_apply(case, l, case.poly())
                claim, in_scope, derived = expected_psi_degree(case, l)
                got = g.degree_in(case.n - l)
                top = g.max_var()
                ok = top <= case.n - l and got == derived
                w = {"degree": got, "claimed": claim, "max_var": top}
                if not in_scope:
                    w["note"] = "square term sits on x_{n-l}; claim out of scope, derived value checked"
                    w["derived"] = derived
                return ok, w

            rec.run(f"degrees.psi[{case.label()} l={l}]", spec, degree)

    spec8 = GroupSpec("gu-even", 4, 2)

    def example_degrees():
        h1 = fam.h_poly(spec8, 1)
        got = []
        for k in (1, 2, 3):
            g = fam.psi_map(3 - k, spec8.r, spec8.n, spec8.ctx)(h1)
            got.append(g.degree_in(5 + k))
        return got == [32, 8, 2], {"degrees": got, "expected": [32, 8, 2]}

    rec.run("degrees.example-gu8", {"family": "gu-even", "m": 4, "q": 2}, example_degrees)
