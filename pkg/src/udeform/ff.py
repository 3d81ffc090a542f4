"""Finite fields F_q, q = p^e, with elements coded as base-p digit vectors.

An element is stored as an integer code in [0, q): digit i (base p) is the
coefficient of x^i relative to a fixed irreducible modulus of degree e over
F_p.  For prime q the code is just the residue.  The Frobenius x -> x^q is the
identity on F_q, which the twist operator tau relies on.
"""

from __future__ import annotations

import functools

from .errors import UdeformError


def _factor_prime_power(q):
    if q < 2:
        raise UdeformError(f"q = {q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise UdeformError(f"q = {q} is not a prime power")
            return p, e
    raise UdeformError(f"q = {q} is not a prime power")


def _poly_mul_mod_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_mod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    while len(a) > df:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - df
            for i in range(df):
                a[shift + i] = (a[shift + i] - lead * f[i]) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _is_irreducible(f, p):
    # trial division by all monic polynomials of degree <= deg(f)/2
    df = len(f) - 1
    for d in range(1, df // 2 + 1):
        for code in range(p**d):
            g = [(code // p**i) % p for i in range(d)] + [1]
            # long division remainder of f by g
            r = list(f)
            while len(r) >= len(g):
                lead = r[-1]
                if lead:
                    shift = len(r) - len(g)
                    for i in range(len(g)):
                        r[shift + i] = (r[shift + i] - lead * g[i]) % p
                r.pop()
            if not any(r):
                return False
    return True


def _smallest_irreducible(p, e):
    # deterministic choice: lexicographically smallest coefficient vector
    for code in range(p**e):
        f = [(code // p**i) % p for i in range(e)] + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise UdeformError("no irreducible polynomial found")  # unreachable


@functools.lru_cache(maxsize=None)
def fq(q) -> "FqContext":
    """Shared context for F_q (cached per q)."""
    return FqContext(q)


class FqContext:
    """Arithmetic tables for F_q = F_p[x]/(modulus)."""

    def __init__(self, q):
        p, e = _factor_prime_power(q)
        self.q = q
        self.p = p
        self.e = e
        self.modulus = None if e == 1 else _smallest_irreducible(p, e)
        self._mul_table = None
        self._inv_table = None

    @property
    def is_prime(self):
        return self.e == 1

    def digits(self, code):
        p = self.p
        return tuple((code // p**i) % p for i in range(self.e))

    def from_digits(self, digits):
        p = self.p
        return sum(int(d) % p * p**i for i, d in enumerate(digits))

    def _build_tables(self):
        q, p = self.q, self.p
        table = [[0] * q for _ in range(q)]
        for a in range(q):
            da = list(self.digits(a))
            for b in range(a, q):
                db = list(self.digits(b))
                prod = _poly_mod(_poly_mul_mod_p(da, db, p), self.modulus, p)
                c = self.from_digits(prod)
                table[a][b] = c
                table[b][a] = c
        inv = [0] * q
        for a in range(1, q):
            row = table[a]
            inv[a] = row.index(1)
        self._mul_table = table
        self._inv_table = inv

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        return self.from_digits(
            (x + y) % p for x, y in zip(self.digits(a), self.digits(b))
        )

    def neg(self, a):
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        return self.from_digits((-x) % p for x in self.digits(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        if self._mul_table is None:
            self._build_tables()
        return self._mul_table[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is None:
            self._build_tables()
        return self._inv_table[a]

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        if a == 0:
            return 0 if n else 1
        out, base = 1, a
        n %= self.q - 1  # a != 0, so a^(q-1) = 1
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def frobenius(self, a, k=1):
        """a^(p^k); a^q is the identity."""
        return self.pow(a, self.p**k)

    def element(self, code):
        return FqElem(self, int(code) % self.q)

    def one(self):
        return self.element(1)

    def zero(self):
        return self.element(0)

    def __repr__(self):
        return f"FqContext(q={self.q})"


class FqElem:
    """An element of F_q; thin wrapper over an integer digit code."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx, code):
        self.ctx = ctx
        self.code = int(code)

    def __add__(self, other):
        other = self._coerce(other)
        return FqElem(self.ctx, self.ctx.add(self.code, other.code))

    def __sub__(self, other):
        other = self._coerce(other)
        return FqElem(self.ctx, self.ctx.sub(self.code, other.code))

    def __neg__(self):
        return FqElem(self.ctx, self.ctx.neg(self.code))

    def __mul__(self, other):
        other = self._coerce(other)
        return FqElem(self.ctx, self.ctx.mul(self.code, other.code))

    def __pow__(self, n):
        return FqElem(self.ctx, self.ctx.pow(self.code, n))

    def inverse(self):
        return FqElem(self.ctx, self.ctx.inv(self.code))

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.ctx.q != self.ctx.q:
                raise UdeformError("mixed F_q contexts")
            return other
        if isinstance(other, int):
            # integers embed through F_p
            return FqElem(self.ctx, other % self.ctx.p)
        return NotImplemented

    __radd__ = __add__
    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.code == other % self.ctx.p
        return isinstance(other, FqElem) and self.code == other.code

    def __hash__(self):
        return hash((self.ctx.q, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"Fq({self.ctx.q})[{self.code}]"
