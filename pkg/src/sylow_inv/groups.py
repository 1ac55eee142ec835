"""Lower unitriangular Sylow p-subgroups of the classical groups.

Each family is the stabiliser, inside the lower unitriangular group U(n),
of a form with block matrix

    X = [[0, 0, X1], [0, X2, 0], [eps * conj(X1)^T, 0, 0]]

(and, for orthogonal groups, of the quadratic form Q).  An element is
written in blocks [[A, 0, 0], [B, F, 0], [C, D, E]] and is determined by A,
B, F and a matrix S subject to S + eps * conj(S)^T = -B^T X2 conj(B):

    D = -conj(X1) (conj(A)^-1)^T conj(B)^T conj(X2) F
    E =  conj(X1) (conj(A)^-1)^T conj(X1)
    C =  conj(X1) (conj(A)^-1)^T conj(S)

For even q the orthogonal families add an outer involution L (or L1) to the
unitriangular group G1; membership of the full group means M or L.M lies
in G1.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from . import linalg as la
from .config import FAMILIES, caps
from .field import (FieldCtx, fp_basis, half_unit, make_field,
                    nonsquare_quadratic_param, prime_power, trace_kernel)
from .poly import MultiPoly, act


class UnsupportedFamily(ValueError):
    pass


class InconsistentParams(ValueError):
    pass


class HypothesisHViolated(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


# family -> (n_blk(m), l, eps, unitary)
_SHAPE = {
    "gu-even": (lambda m: m - 1, 2, 1, True),
    "gu-odd": (lambda m: m, 1, 1, True),
    "sp": (lambda m: m - 1, 2, -1, False),
    "o-plus": (lambda m: m - 1, 2, 1, False),
    "o-minus": (lambda m: m, 2, 1, False),
    "o-odd": (lambda m: m, 1, 1, False),
}


def J(n):
    return tuple(tuple(1 if i + j == n - 1 else 0 for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class GroupSpec:
    family: str
    m: int
    q: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedFamily(f"unknown family {self.family!r}")
        if self.m < 1:
            raise UnsupportedFamily("m must be at least 1")
        prime_power(self.q)

    # field data
    @property
    def p(self):
        return prime_power(self.q)[0]

    @property
    def e(self):
        return prime_power(self.q)[1]

    @property
    def unitary(self):
        return _SHAPE[self.family][3]

    @property
    def orthogonal(self):
        return self.family.startswith("o-")

    @property
    def even(self):
        return self.p == 2

    @property
    def ctx(self) -> FieldCtx:
        return make_field(self.p, 2 * self.e if self.unitary else self.e)

    @property
    def r(self):
        """Order of the acting field (q^2 for unitary groups)."""
        return self.ctx.r

    # shape data
    @property
    def n_blk(self):
        return _SHAPE[self.family][0](self.m)

    @property
    def l(self):  # noqa: E743
        return _SHAPE[self.family][1]

    @property
    def eps(self):
        return _SHAPE[self.family][2]

    @property
    def n(self):
        return 2 * self.n_blk + self.l

    @property
    def has_outer(self):
        return self.even and self.family in ("o-plus", "o-minus")

    def label(self):
        return f"{self.family}(m={self.m}, q={self.q})"


def make_spec(family: str, m: int, q: int) -> GroupSpec:
    return GroupSpec(family, m, q)


# -- forms -------------------------------------------------------------------

def conj_code(spec: GroupSpec, a: int) -> int:
    return spec.ctx.conj(a) if spec.unitary else a


def conj_mat(spec, A):
    return la.mconj(spec.ctx, A) if spec.unitary else A


def minus_a(spec: GroupSpec) -> int:
    """Parameter a with X^2 + X + a irreducible over F_q (O-minus only)."""
    return nonsquare_quadratic_param(spec.ctx)


def middle_form(spec: GroupSpec):
    ctx = spec.ctx
    f = spec.family
    two = ctx.from_int(2)
    if f in ("gu-even", "o-plus"):
        return J(2)
    if f == "gu-odd":
        return ((1,),)
    if f == "sp":
        return ((0, 1), (ctx.neg(1), 0))
    if f == "o-odd":
        return ((two,),)
    # o-minus: Gram matrix of the polar form of y1^2 + y1 y2 + a y2^2
    if spec.even:
        return J(2)
    a = minus_a(spec)
    return ((two, 1), (1, ctx.mul(two, a)))


def form_matrix(spec: GroupSpec):
    nb, l = spec.n_blk, spec.l
    X1 = J(nb)
    X2 = middle_form(spec)
    epsX1T = la.transpose(conj_mat(spec, X1)) if nb else ()
    if spec.eps == -1:
        epsX1T = la.mneg(spec.ctx, epsX1T)
    if nb == 0:
        return X2
    return la.blocks([
        [la.zeros(nb, nb), la.zeros(nb, l), X1],
        [la.zeros(l, nb), X2, la.zeros(l, nb)],
        [epsX1T, la.zeros(nb, l), la.zeros(nb, nb)],
    ])


def quadratic_form(spec: GroupSpec) -> MultiPoly | None:
    """Q for orthogonal families; its polar form is X."""
    if not spec.orthogonal:
        return None
    ctx, n = spec.ctx, spec.n
    x = MultiPoly.gens(ctx, n)
    Q = MultiPoly.zero(ctx, n)
    for i in range(spec.n_blk):
        Q = Q + x[i] * x[n - 1 - i]
    c = spec.n_blk  # 0-based index of the first middle variable
    if spec.family == "o-plus":
        Q = Q + x[c] * x[c + 1]
    elif spec.family == "o-odd":
        Q = Q + x[c] * x[c]
    else:
        a = minus_a(spec)
        Q = Q + x[c] * x[c] + x[c] * x[c + 1] + (x[c + 1] * x[c + 1]).scale(a)
    return Q


def outer_involution(spec: GroupSpec):
    """L for even O-plus, L1 for even O-minus, else None."""
    if not spec.has_outer:
        return None
    nb = spec.n_blk
    mid = J(2) if spec.family == "o-plus" else ((1, 1), (0, 1))
    rows = []
    n = spec.n
    for i in range(n):
        row = [0] * n
        if nb <= i < nb + 2:
            for j in range(2):
                row[nb + j] = mid[i - nb][j]
        else:
            row[i] = 1
        rows.append(tuple(row))
    return tuple(rows)


# -- block parameter sets ----------------------------------------------------

def _F(c):
    return ((1, 0), (c, 1))


def middle_block_scan(spec: GroupSpec):
    """All lower unitriangular l x l F preserving X2 (and Q on the middle)."""
    ctx, l = spec.ctx, spec.l
    if l == 1:
        return [((1,),)]
    X2 = middle_form(spec)
    Q = quadratic_form(spec)
    Qmid = None
    if Q is not None:
        c = spec.n_blk
        terms = {}
        for e, v in Q.terms.items():
            if all(a == 0 for i, a in enumerate(e) if i not in (c, c + 1)):
                terms[(e[c], e[c + 1])] = v
        Qmid = MultiPoly(ctx, 2, terms)
    out = []
    for c in range(ctx.r):
        F = _F(c)
        lhs = la.matprod(ctx, la.transpose(F), X2, conj_mat(spec, F))
        if lhs != X2:
            continue
        if Qmid is not None and act(F, Qmid) != Qmid:
            continue
        out.append(F)
    return out


def allowed_middle(spec: GroupSpec):
    """F blocks used for G1.  Even O-minus keeps only F = I (see ledger)."""
    scan = middle_block_scan(spec)
    if spec.family == "o-minus" and spec.even:
        return [F for F in scan if F == la.identity(2)]
    return scan


def diag_choices(spec: GroupSpec) -> list[int]:
    """Free part of each diagonal entry of S."""
    ctx = spec.ctx
    if spec.unitary:
        return trace_kernel(ctx)[0]
    if spec.eps == -1:
        return list(range(ctx.r))
    return [0]


def _middle_values(spec):
    return [F[1][0] for F in allowed_middle(spec)] if spec.l == 2 else [0]


# -- elements ----------------------------------------------------------------

@dataclass(frozen=True)
class ElementParams:
    A: tuple
    B: tuple
    F: tuple
    S_lower: tuple
    S_diag: tuple


def s_target(spec: GroupSpec, B):
    """Y = -B^T X2 conj(B), the right-hand side for S."""
    ctx = spec.ctx
    if spec.n_blk == 0:
        return ()
    return la.mneg(ctx, la.matprod(ctx, la.transpose(B), middle_form(spec), conj_mat(spec, B)))


def forced_diag(spec: GroupSpec, B, Y, i: int) -> int:
    """Part of s_ii fixed by B (the free part is added separately)."""
    ctx = spec.ctx
    if spec.unitary:
        return ctx.mul(half_unit(ctx), Y[i][i])
    if spec.eps == -1:
        return 0
    if not spec.even:
        return ctx.div(Y[i][i], ctx.from_int(2))
    b1 = B[0][i]
    if spec.family == "o-odd":
        return ctx.mul(b1, b1)
    b2 = B[1][i]
    if spec.family == "o-plus":
        return ctx.mul(b1, b2)
    a = minus_a(spec)
    return ctx.add(ctx.add(ctx.mul(b1, b1), ctx.mul(b1, b2)), ctx.mul(a, ctx.mul(b2, b2)))


def solve_s(spec: GroupSpec, B, S_lower, S_diag):
    ctx, nb = spec.ctx, spec.n_blk
    Y = s_target(spec, B)
    S = [[0] * nb for _ in range(nb)]
    for i in range(nb):
        for j in range(i):
            S[i][j] = S_lower[i][j]
    for i in range(nb):
        S[i][i] = ctx.add(forced_diag(spec, B, Y, i), S_diag[i])
    for i in range(nb):
        for j in range(i + 1, nb):
            t = conj_code(spec, S[j][i])
            if spec.eps == 1:
                t = ctx.neg(t)
            S[i][j] = ctx.add(Y[i][j], t)
    return tuple(tuple(r) for r in S)


def assemble(spec: GroupSpec, A, B, F, S):
    """Block matrix from (A, B, F, S) via the formulas in the module doc."""
    ctx, nb = spec.ctx, spec.n_blk
    if nb == 0:
        return F
    X1 = J(nb)
    X1b = conj_mat(spec, X1)
    K = la.matmul(ctx, X1b, la.transpose(conj_mat(spec, la.inv_lower_unitriangular(ctx, A))))
    D = la.mneg(ctx, la.matprod(ctx, K, la.transpose(conj_mat(spec, B)),
                                conj_mat(spec, middle_form(spec)), F))
    E = la.matmul(ctx, K, X1b)
    C = la.matmul(ctx, K, conj_mat(spec, S))
    l = spec.l
    return la.blocks([
        [A, la.zeros(nb, l), la.zeros(nb, nb)],
        [B, F, la.zeros(l, nb)],
        [C, D, E],
    ])


def validate_params(spec: GroupSpec, P: ElementParams):
    nb, l = spec.n_blk, spec.l
    if la.shape(P.A) != (nb, nb) or (nb and not la.is_lower_unitriangular(P.A)):
        raise InconsistentParams("A must be lower unitriangular of size n_blk")
    if len(P.B) != l or any(len(row) != nb for row in P.B):
        raise InconsistentParams("B must be l x n_blk")
    if P.F not in allowed_middle(spec):
        raise InconsistentParams(f"F block {P.F} not admissible")
    for i in range(nb):
        for j in range(i, nb):
            if P.S_lower[i][j]:
                raise InconsistentParams("S_lower must be strictly lower")
    allowed = set(diag_choices(spec))
    if len(P.S_diag) != nb or any(d not in allowed for d in P.S_diag):
        raise InconsistentParams("diagonal of S violates its constraint")


def element(spec: GroupSpec, params: ElementParams):
    validate_params(spec, params)
    S = solve_s(spec, params.B, params.S_lower, params.S_diag)
    return assemble(spec, params.A, params.B, params.F, S)


def element_from_blocks(spec: GroupSpec, A, B, F, S):
    """Assemble from a full S after checking every constraint on it."""
    ctx, nb = spec.ctx, spec.n_blk
    lower = tuple(tuple(S[i][j] if j < i else 0 for j in range(nb)) for i in range(nb))
    Y = s_target(spec, B)
    diag = tuple(ctx.sub(S[i][i], forced_diag(spec, B, Y, i)) for i in range(nb))
    P = ElementParams(A, B, F, lower, diag)
    validate_params(spec, P)
    if solve_s(spec, B, lower, diag) != tuple(tuple(r) for r in S):
        raise InconsistentParams("S does not solve S + eps conj(S)^T = -B^T X2 conj(B)")
    return assemble(spec, A, B, F, S)


def identity_params(spec: GroupSpec) -> ElementParams:
    nb, l = spec.n_blk, spec.l
    return ElementParams(la.identity(nb), la.zeros(l, nb), la.identity(l),
                         la.zeros(nb, nb), (0,) * nb)


# -- membership --------------------------------------------------------------

def preserves_form(spec: GroupSpec, M) -> bool:
    X = form_matrix(spec)
    ctx = spec.ctx
    return la.matprod(ctx, la.transpose(M), X, conj_mat(spec, M)) == X


def preserves_quadratic(spec: GroupSpec, M) -> bool:
    Q = quadratic_form(spec)
    return Q is None or act(M, Q) == Q


def in_g1(spec: GroupSpec, M) -> bool:
    if la.shape(M) != (spec.n, spec.n) or not la.is_lower_unitriangular(M):
        return False
    if not preserves_form(spec, M) or not preserves_quadratic(spec, M):
        return False
    nb = spec.n_blk
    F = la.sub_block(M, nb, nb + spec.l, nb, nb + spec.l)
    return F in allowed_middle(spec)


def is_member(spec: GroupSpec, M) -> bool:
    if in_g1(spec, M):
        return True
    L = outer_involution(spec)
    return L is not None and in_g1(spec, la.matmul(spec.ctx, L, M))


# -- orders --------------------------------------------------------------------

def g1_order(spec: GroupSpec) -> int:
    q, m = spec.q, spec.m
    return {
        "gu-even": q ** (2 * m * m - m),
        "gu-odd": q ** (2 * m * m + m),
        "sp": q ** (m * m),
        "o-plus": q ** (m * (m - 1)),
        "o-minus": q ** (m * (m + 1)),
        "o-odd": q ** (m * m),
    }[spec.family]


def group_order(spec: GroupSpec) -> int:
    return g1_order(spec) * (2 if spec.has_outer else 1)


def classical_order(spec: GroupSpec) -> int:
    """Order of the full classical group the Sylow subgroup lives in."""
    q, m = spec.q, spec.m
    f = spec.family

    def prod(it):
        out = 1
        for v in it:
            out *= v
        return out

    if f.startswith("gu"):
        n = spec.n
        return q ** (n * (n - 1) // 2) * prod(q**i - (-1) ** i for i in range(1, n + 1))
    if f == "sp":
        return q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))
    if f == "o-plus":
        return 2 * q ** (m * (m - 1)) * (q**m - 1) * prod(q ** (2 * i) - 1 for i in range(1, m))
    if f == "o-minus":
        return 2 * q ** (m * (m + 1)) * (q ** (m + 1) + 1) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))
    base = q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))
    return base if spec.even else 2 * base


def p_part(N: int, p: int) -> int:
    out = 1
    while N % p == 0:
        N //= p
        out *= p
    return out


def s_solution_count(ctx: FieldCtx, eps: int, X2, B, unitary: bool) -> int:
    """Closed-form number of S with S + eps conj(S)^T = -B^T X2 conj(B).

    Requires the solvability hypothesis: over F_q with q even and eps = +1
    the diagonal of B^T X2 B must vanish.
    """
    nb = len(B[0]) if B else 0
    q = ctx.r if not unitary else int(round(ctx.r ** 0.5))
    if unitary:
        return q ** (nb * (nb - 1)) * q**nb
    if eps == 1 and ctx.p != 2:
        return q ** (nb * (nb - 1) // 2)
    if eps == 1 and ctx.p == 2:
        Y = la.matprod(ctx, la.transpose(B), X2, B)
        if any(Y[i][i] for i in range(nb)):
            raise HypothesisHViolated("diag(B^T X2 B) is not zero in characteristic 2")
    return q ** (nb * (nb - 1) // 2) * q**nb


def count_S_solutions(spec: GroupSpec, B) -> int:
    return s_solution_count(spec.ctx, spec.eps, middle_form(spec), B, spec.unitary)


def count_S_bruteforce(ctx: FieldCtx, eps: int, X2, B, unitary: bool) -> int:
    """Exhaustive count over all n_blk x n_blk matrices S."""
    nb = len(B[0]) if B else 0
    conj = ctx.conj if unitary else (lambda a: a)
    Bb = tuple(tuple(conj(a) for a in row) for row in B)
    Y = la.mneg(ctx, la.matprod(ctx, la.transpose(B), X2, Bb))
    count = 0
    for flat in itertools.product(range(ctx.r), repeat=nb * nb):
        ok = True
        for i in range(nb):
            for j in range(nb):
                t = conj(flat[j * nb + i])
                if eps == -1:
                    t = ctx.neg(t)
                if ctx.add(flat[i * nb + j], t) != Y[i][j]:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


# -- enumeration and generators ------------------------------------------------

def _lower_slots(nb):
    return [(i, j) for i in range(nb) for j in range(i)]


def _params_iter(spec: GroupSpec):
    ctx, nb, l = spec.ctx, spec.n_blk, spec.l
    R = range(ctx.r)
    slots = _lower_slots(nb)
    Fs = allowed_middle(spec)
    diag = diag_choices(spec)
    for avals in itertools.product(R, repeat=len(slots)):
        A = [list(r) for r in la.identity(nb)]
        for (i, j), v in zip(slots, avals):
            A[i][j] = v
        A = tuple(tuple(r) for r in A)
        for bvals in itertools.product(R, repeat=l * nb):
            B = tuple(tuple(bvals[k * nb:(k + 1) * nb]) for k in range(l))
            for F in Fs:
                for svals in itertools.product(R, repeat=len(slots)):
                    S = [[0] * nb for _ in range(nb)]
                    for (i, j), v in zip(slots, svals):
                        S[i][j] = v
                    S = tuple(tuple(r) for r in S)
                    for dvals in itertools.product(diag, repeat=nb):
                        yield ElementParams(A, B, F, S, tuple(dvals))


def enumerate_group(spec: GroupSpec, cap: int | None = None):
    """Every element of the Sylow subgroup, as code matrices."""
    cap = caps().enum if cap is None else cap
    order = group_order(spec)
    if order > cap:
        raise CapExceeded(f"|G| = {order} exceeds enumeration cap {cap}")
    L = outer_involution(spec)
    out = []
    for P in _params_iter(spec):
        M = element(spec, P)
        out.append(M)
        if L is not None:
            out.append(la.matmul(spec.ctx, L, M))
    return out


def generator_params(spec: GroupSpec) -> list[tuple[str, ElementParams]]:
    """One-parameter elements: each free slot set to a GF(p)-basis value."""
    ctx, nb, l = spec.ctx, spec.n_blk, spec.l
    base = identity_params(spec)
    full_basis = fp_basis(ctx, range(ctx.r))
    out = []

    def setm(M, i, j, v):
        M = [list(r) for r in M]
        M[i][j] = v
        return tuple(tuple(r) for r in M)

    for (i, j) in _lower_slots(nb):
        for v in full_basis:
            out.append((f"A[{i + 1},{j + 1}]",
                        ElementParams(setm(base.A, i, j, v), base.B, base.F, base.S_lower, base.S_diag)))
    for k in range(l):
        for j in range(nb):
            for v in full_basis:
                out.append((f"B[{k + 1},{j + 1}]",
                            ElementParams(base.A, setm(base.B, k, j, v), base.F, base.S_lower, base.S_diag)))
    if l == 2:
        for v in fp_basis(ctx, _middle_values(spec)):
            out.append(("F[2,1]", ElementParams(base.A, base.B, _F(v), base.S_lower, base.S_diag)))
    for (i, j) in _lower_slots(nb):
        for v in full_basis:
            out.append((f"S[{i + 1},{j + 1}]",
                        ElementParams(base.A, base.B, base.F, setm(base.S_lower, i, j, v), base.S_diag)))
    for i in range(nb):
        for v in fp_basis(ctx, diag_choices(spec)):
            d = list(base.S_diag)
            d[i] = v
            out.append((f"S[{i + 1},{i + 1}]",
                        ElementParams(base.A, base.B, base.F, base.S_lower, tuple(d))))
    return out


@functools.lru_cache(maxsize=None)
def g1_generators(spec: GroupSpec):
    return tuple(element(spec, P) for _, P in generator_params(spec))


@functools.lru_cache(maxsize=None)
def generators(spec: GroupSpec):
    """Generators of the full Sylow subgroup (G1 plus L or L1 if present)."""
    gens = list(g1_generators(spec))
    L = outer_involution(spec)
    if L is not None:
        gens.append(L)
    return tuple(gens)


def closure(ctx: FieldCtx, gens, cap: int | None = None, n: int | None = None):
    """Group generated by gens (finite, so closing under products suffices).

    n is only needed when gens is empty.
    """
    cap = caps().enum if cap is None else cap
    n = len(gens[0]) if gens else n
    one = la.identity(n)
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                x = la.matmul(ctx, g, h)
                if x not in seen:
                    seen.add(x)
                    if len(seen) > cap:
                        raise CapExceeded(f"closure exceeds cap {cap}")
                    nxt.append(x)
        frontier = nxt
    return seen


def middle_block_report(spec: GroupSpec) -> dict:
    scan = middle_block_scan(spec)
    used = allowed_middle(spec)
    return {"scan": [list(map(list, F)) for F in scan], "used": [list(map(list, F)) for F in used]}
