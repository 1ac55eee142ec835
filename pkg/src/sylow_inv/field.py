"""Finite fields GF(p^s).

Elements are stored as integer codes: the coefficient vector of the residue
polynomial (low degree first) read as base-p digits.  The defining modulus is
the lexicographically smallest monic irreducible of degree s, comparing
coefficient vectors low degree first.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .config import caps

TABLE_LIMIT = 1024


class FieldError(ValueError):
    pass


class NotPrime(FieldError):
    pass


class CardinalityCapExceeded(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class NotAQuadraticExtension(FieldError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(r: int) -> tuple[int, int]:
    """Return (p, s) with r = p**s, or raise NotPrime."""
    for p in range(2, r + 1):
        if r % p == 0:
            s = 0
            while r % p == 0:
                r //= p
                s += 1
            if r != 1:
                raise NotPrime(f"{p}^{s}*{r} is not a prime power")
            return p, s
    raise NotPrime(f"{r} is not a prime power")


# -- polynomials over GF(p) as lists, low degree first ---------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(_trim(a)) - 1 >= db:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
    return a


def _is_irreducible(f, p) -> bool:
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _pmod(f, list(tail) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    for tail in itertools.product(range(p), repeat=s):
        f = list(tail) + [1]
        if s == 1 or (f[0] != 0 and _is_irreducible(f, p)):
            return tuple(f)
    raise AssertionError("no irreducible found")


class _LazyRows:
    """Row-cached operation table for fields too large to tabulate eagerly."""

    def __init__(self, op, r):
        self.op, self.r, self.rows = op, r, {}

    def __getitem__(self, a):
        row = self.rows.get(a)
        if row is None:
            row = self.rows[a] = [self.op(a, b) for b in range(self.r)]
        return row


class FieldCtx:
    """Arithmetic context for GF(p^s) on integer codes 0..r-1."""

    def __init__(self, p: int, s: int):
        self.p, self.s = p, s
        self.r = p**s
        self.modulus = smallest_irreducible(p, s)
        self.half = s // 2 if s % 2 == 0 else None
        self._build()

    # construction
    def _mulx(self, code):
        p, s = self.p, self.s
        c = self.coeffs(code)
        top = c[-1]
        c = [0] + c[:-1]
        if top:
            c = [(ci - top * mi) % p for ci, mi in zip(c, self.modulus)]
        return self.from_coeffs(c)

    def _build(self):
        p, r = self.p, self.r
        if self.s == 1:
            mul = lambda a, b: a * b % p  # noqa: E731
        else:
            mul = self._slow_mul
        gen = None
        for g in range(2, r) if r > 2 else [1]:
            seen, x = 1, g
            while x != 1:
                x = mul(x, g)
                seen += 1
            if seen == r - 1:
                gen = g
                break
        if r == 2:
            gen = 1
        self.primitive = gen
        exp = [1] * (2 * (r - 1))
        log = [0] * r
        x = 1
        for i in range(r - 1):
            exp[i] = exp[i + r - 1] = x
            log[x] = i
            x = mul(x, gen)
        self._exp, self._log = exp, log
        self._neg = [self._negslow(a) for a in range(r)]
        self._frob = [self.mul_pow(a, p) for a in range(r)]
        if r <= TABLE_LIMIT:
            self.add_t = [[self._addslow(a, b) for b in range(r)] for a in range(r)]
            self.mul_t = [[self.mul(a, b) for b in range(r)] for a in range(r)]
        else:
            self.add_t = _LazyRows(self._addslow, r)
            self.mul_t = _LazyRows(self.mul, r)

    def _slow_mul(self, a, b):
        acc = 0
        bc = self.coeffs(b)
        x = a
        for d in bc:
            for _ in range(d):
                acc = self._addslow(acc, x)
            x = self._mulx(x)
        return acc

    def _addslow(self, a, b):
        p = self.p
        if p == 2:
            return a ^ b
        out, mult = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _negslow(self, a):
        p = self.p
        out, mult = 0, 1
        while a:
            out += (-(a % p) % p) * mult
            a //= p
            mult *= p
        return out

    # codes
    def coeffs(self, code: int) -> list[int]:
        out = []
        for _ in range(self.s):
            out.append(code % self.p)
            code //= self.p
        return out

    def from_coeffs(self, coeffs) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + (int(c) % self.p)
        return code

    def from_int(self, n: int) -> int:
        return n % self.p

    # arithmetic on codes
    def add(self, a, b):
        return self.add_t[a][b]

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self._neg[b])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(self.r - 1 - self._log[a]) % (self.r - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def mul_pow(self, a, e: int):
        if e == 0:
            return 1
        if a == 0:
            return 0
        if e < 0:
            a, e = self.inv(a), -e
        return self._exp[self._log[a] * e % (self.r - 1)]

    def frob(self, a, k: int = 1):
        k %= self.s
        for _ in range(k):
            a = self._frob[a]
        return a

    def conj(self, a):
        if self.half is None:
            raise NotAQuadraticExtension(f"GF({self.p}^{self.s}) has no conjugation")
        return self.frob(a, self.half)

    def elements(self):
        return range(self.r)

    # identity and display
    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.s})"

    def fmt(self, code: int) -> str:
        if code < self.p:
            return str(code)
        parts = []
        for i, c in enumerate(self.coeffs(code)):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}{mono}")
        return "(" + "+".join(parts) + ")" if parts else "0"

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code)

    def fixed_field(self, d: int) -> list[int]:
        """Codes fixed by a -> a^(p^d)."""
        return [a for a in range(self.r) if self.frob(a, d) == a]


@functools.lru_cache(maxsize=None)
def _make(p, s):
    return FieldCtx(p, s)


def make_field(p: int, s: int) -> FieldCtx:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if s < 1:
        raise FieldError("extension degree must be positive")
    if p**s > caps().field_order:
        raise CardinalityCapExceeded(f"|GF({p}^{s})| = {p**s} exceeds cap {caps().field_order}")
    return _make(p, s)


def field_of_order(r: int) -> FieldCtx:
    p, s = prime_power(r)
    return make_field(p, s)


@dataclass(frozen=True)
class FieldElement:
    ctx: FieldCtx
    code: int

    def _other(self, o):
        if isinstance(o, int):
            return self.ctx.from_int(o)
        if not isinstance(o, FieldElement):
            return NotImplemented
        if o.ctx != self.ctx:
            raise FieldMismatch(f"{self.ctx} vs {o.ctx}")
        return o.code

    @property
    def coeffs(self):
        return self.ctx.coeffs(self.code)

    def __add__(self, o):
        b = self._other(o)
        return b if b is NotImplemented else FieldElement(self.ctx, self.ctx.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, o):
        b = self._other(o)
        return b if b is NotImplemented else FieldElement(self.ctx, self.ctx.sub(self.code, b))

    def __rsub__(self, o):
        return -(self - o)

    def __mul__(self, o):
        b = self._other(o)
        return b if b is NotImplemented else FieldElement(self.ctx, self.ctx.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, o):
        b = self._other(o)
        return b if b is NotImplemented else FieldElement(self.ctx, self.ctx.div(self.code, b))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.mul_pow(self.code, e))

    def __bool__(self):
        return self.code != 0

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv(self.code))

    def frobenius(self, k: int = 1):
        return FieldElement(self.ctx, self.ctx.frob(self.code, k))

    def conjugate(self):
        return FieldElement(self.ctx, self.ctx.conj(self.code))

    def __repr__(self):
        return self.ctx.fmt(self.code)


def arith(a: FieldElement, b: FieldElement, kind: str) -> FieldElement:
    """Binary field operation by name: add, sub, mul, div."""
    ops = {"add": FieldElement.__add__, "sub": FieldElement.__sub__,
           "mul": FieldElement.__mul__, "div": FieldElement.__truediv__}
    return ops[kind](a, b)


def frobenius(a: FieldElement, k: int = 1) -> FieldElement:
    return a.frobenius(k)


def conjugate(a: FieldElement) -> FieldElement:
    return a.conjugate()


def trace_kernel(ctx: FieldCtx) -> tuple[list[int], int]:
    """Elements a with a + conj(a) = 0, and the basis element c - conj(c).

    c is the smallest code outside the fixed subfield, so the basis w
    satisfies w^(q-1) = -1 and the kernel is w times the subfield.
    """
    if ctx.half is None:
        raise NotAQuadraticExtension(f"{ctx} is not a quadratic extension")
    ker = [a for a in range(ctx.r) if ctx.add(a, ctx.conj(a)) == 0]
    sub = set(ctx.fixed_field(ctx.half))
    c = next(a for a in range(ctx.r) if a not in sub)
    return ker, ctx.sub(c, ctx.conj(c))


def half_unit(ctx: FieldCtx) -> int:
    """Smallest c with c + conj(c) = 1."""
    return next(a for a in range(ctx.r) if ctx.add(a, ctx.conj(a)) == 1)


def fp_basis(ctx: FieldCtx, elems) -> list[int]:
    """Greedy GF(p)-basis of an additively closed set of codes."""
    span = {0}
    basis = []
    for a in sorted(elems):
        if a in span:
            continue
        basis.append(a)
        new = set()
        for x in span:
            y = x
            for _ in range(ctx.p - 1):
                y = ctx.add(y, a)
                new.add(y)
        span |= new
    return basis


def nonsquare_quadratic_param(ctx: FieldCtx) -> int:
    """Smallest a with X^2 + X + a irreducible over the field."""
    for a in range(ctx.r):
        if all(ctx.add(ctx.add(ctx.mul(x, x), x), a) != 0 for x in range(ctx.r)):
            return a
    raise AssertionError("unreachable")
