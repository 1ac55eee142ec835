"""Sparse multivariate polynomials over GF(p^s).

Variables are 1-indexed in the public API.  Monomials are exponent tuples
and are ordered by grevlex with x1 < x2 < ... < xn: higher total degree
wins, ties go to the monomial whose first differing exponent (scanning from
x1) is smaller.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass

from .config import caps
from .field import FieldCtx, FieldElement, FieldMismatch


class ExponentCapExceeded(OverflowError):
    pass


def grevlex_key(e: tuple) -> tuple:
    return (sum(e),) + tuple(-a for a in e)


def _coerce(ctx: FieldCtx, c) -> int:
    if isinstance(c, FieldElement):
        if c.ctx != ctx:
            raise FieldMismatch(f"{c.ctx} vs {ctx}")
        return c.code
    return ctx.from_int(c)


class MultiPoly:
    __slots__ = ("ctx", "n", "terms")

    def __init__(self, ctx: FieldCtx, n: int, terms: dict | None = None):
        self.ctx, self.n = ctx, n
        self.terms = terms if terms is not None else {}

    # constructors
    @classmethod
    def zero(cls, ctx, n):
        return cls(ctx, n)

    @classmethod
    def const(cls, ctx, n, c=1):
        """Constant from an integer (reduced mod p) or a FieldElement."""
        code = _coerce(ctx, c)
        return cls(ctx, n, {(0,) * n: code} if code else {})

    @classmethod
    def const_code(cls, ctx, n, code: int):
        return cls(ctx, n, {(0,) * n: code} if code else {})

    @classmethod
    def var(cls, ctx, n, i, power=1):
        e = [0] * n
        e[i - 1] = power
        return cls(ctx, n, {tuple(e): 1})

    @classmethod
    def gens(cls, ctx, n):
        return [cls.var(ctx, n, i) for i in range(1, n + 1)]

    @classmethod
    def linear(cls, ctx, coeffs):
        """Linear form sum coeffs[j] * x_{j+1} from codes."""
        n = len(coeffs)
        out = {}
        for j, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[j] = 1
                out[tuple(e)] = c
        return cls(ctx, n, out)

    # basic queries
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading(self):
        if not self.terms:
            return None
        return max(self.terms.items(), key=lambda t: grevlex_key(t[0]))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i - 1] for e in self.terms), default=-1)

    def max_var(self) -> int:
        """Largest index i such that x_i occurs (0 for constants)."""
        top = 0
        for e in self.terms:
            for i in range(self.n, top, -1):
                if e[i - 1]:
                    top = i
                    break
        return top

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, e) -> int:
        return self.terms.get(tuple(e), 0)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _check(self, other):
        if self.ctx != other.ctx:
            raise FieldMismatch(f"{self.ctx} vs {other.ctx}")
        if self.n != other.n:
            raise ValueError(f"ring mismatch: {self.n} vs {other.n} variables")

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.ctx, self.n, other)
        self._check(other)
        at = self.ctx.add_t
        out = dict(self.terms)
        for e, c in other.terms.items():
            old = out.get(e)
            if old is None:
                out[e] = c
            else:
                s = at[old][c]
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly(self.ctx, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ctx.neg
        return MultiPoly(self.ctx, self.n, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.ctx, self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, code: int) -> "MultiPoly":
        if code == 0:
            return MultiPoly(self.ctx, self.n)
        row = self.ctx.mul_t[code]
        return MultiPoly(self.ctx, self.n, {e: row[c] for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(_coerce(self.ctx, other))
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return MultiPoly(self.ctx, self.n)
        self._cap_check(_maxexp(a) + _maxexp(b))
        mt, at = self.ctx.mul_t, self.ctx.add_t
        add = operator.add
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            row = mt[cb]
            for ea, ca in a.items():
                e = tuple(map(add, ea, eb))
                c = row[ca]
                old = get(e)
                if old is None:
                    out[e] = c
                else:
                    s = at[old][c]
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return MultiPoly(self.ctx, self.n, out)

    __rmul__ = __mul__

    def _cap_check(self, bound):
        if bound > caps().exponent:
            raise ExponentCapExceeded(f"exponent {bound} exceeds cap {caps().exponent}")

    def frobenius_power(self, k: int = 1) -> "MultiPoly":
        """f^(p^k), computed termwise."""
        if k == 0:
            return self
        pk = self.ctx.p**k
        self._cap_check(_maxexp(self.terms) * pk)
        frob = self.ctx.frob
        return MultiPoly(self.ctx, self.n,
                         {tuple(a * pk for a in e): frob(c, k) for e, c in self.terms.items()})

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("negative power")
        p = self.ctx.p
        result = MultiPoly.const_code(self.ctx, self.n, 1)
        k = 0
        while e:
            d = e % p
            if d:
                base = self.frobenius_power(k)
                for _ in range(d):
                    result = result * base
            e //= p
            k += 1
        return result

    def extend(self, n: int) -> "MultiPoly":
        """Same polynomial viewed in a ring with n >= self.n variables."""
        if n < self.n:
            raise ValueError("cannot shrink ring")
        pad = (0,) * (n - self.n)
        return MultiPoly(self.ctx, n, {e + pad: c for e, c in self.terms.items()})

    def substitute(self, images) -> "MultiPoly":
        """Replace x_i by images[i-1]; images all live in one ring."""
        images = list(images)
        if len(images) != self.n:
            raise ValueError("need one image per variable")
        ctx, n2 = self.ctx, images[0].n
        cache: list[dict] = [dict() for _ in images]

        def power(i, a):
            got = cache[i].get(a)
            if got is None:
                got = cache[i][a] = images[i] ** a
            return got

        acc: dict = {}
        one = MultiPoly.const_code(ctx, n2, 1)
        for e, c in self.terms.items():
            factors = [power(i, a) for i, a in enumerate(e) if a]
            factors.sort(key=len)
            term = one
            for f in factors:
                term = term * f
                if not term.terms:
                    break
            term = term.scale(c)
            _accumulate(acc, term.terms, ctx.add_t)
        return MultiPoly(ctx, n2, acc)

    # rendering
    def __repr__(self):
        return self.to_str()

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = [f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(e) if a]
            parts.append("*".join([self.ctx.fmt(c)] + mono))
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "field": [self.ctx.p, self.ctx.s],
            "n": self.n,
            "terms": [[list(e), self.ctx.coeffs(c)] for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict, ctx: FieldCtx | None = None) -> "MultiPoly":
        from .field import make_field
        if ctx is None:
            ctx = make_field(*data["field"])
        return cls(ctx, data["n"], {tuple(e): ctx.from_coeffs(c) for e, c in data["terms"]})


def _maxexp(terms) -> int:
    return max((max(e, default=0) for e in terms), default=0)


def _accumulate(acc, terms, at):
    for e, c in terms.items():
        old = acc.get(e)
        if old is None:
            acc[e] = c
        else:
            s = at[old][c]
            if s:
                acc[e] = s
            else:
                del acc[e]


@dataclass(frozen=True)
class AlgebraMap:
    """Algebra homomorphism x_i -> images[i-1]."""
    images: tuple

    def __call__(self, f: MultiPoly) -> MultiPoly:
        return f.substitute(self.images)

    def compose(self, inner: "AlgebraMap") -> "AlgebraMap":
        """self after inner: x_i -> self(inner.images[i])."""
        return AlgebraMap(tuple(self(g) for g in inner.images))


def substitute(f: MultiPoly, images) -> MultiPoly:
    return f.substitute(images.images if isinstance(images, AlgebraMap) else images)


def linear_images(ctx: FieldCtx, M) -> list[MultiPoly]:
    """x_i -> sum_j M[i][j] x_j.  Entries are codes or FieldElements."""
    rows = [[c.code if isinstance(c, FieldElement) else c for c in row] for row in M]
    return [MultiPoly.linear(ctx, row) for row in rows]


def act(M, f: MultiPoly) -> MultiPoly:
    """Right action (f.M)(x) = f(M x).  act(M1, act(M2, f)) == act(M2 M1, f)."""
    if len(M) != f.n:
        raise ValueError("matrix size does not match ring")
    return f.substitute(linear_images(f.ctx, M))
