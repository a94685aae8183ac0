"""Finite fields GF(p^f) and small matrices over them.

Field elements are plain ints in ``range(q)``: the element with coordinate
vector ``(c_0, ..., c_{f-1})`` relative to the powers of a root of the
defining polynomial has label ``sum(c_i * p**i)``.  All arithmetic is table
driven; tables are built once per ``q`` and cached.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

__all__ = ["PrimePower", "Field", "field", "Mat", "is_prime"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimePower:
    p: int
    f: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.f < 1:
            raise ValueError(f"exponent must be >= 1, got {self.f}")

    @property
    def q(self) -> int:
        return self.p**self.f

    @classmethod
    def of(cls, q: int) -> "PrimePower":
        """Factor ``q`` as ``p**f``; raise ``ValueError`` if it is not a prime power."""
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        for p in range(2, q + 1):
            if q % p == 0:
                f = 0
                m = q
                while m % p == 0:
                    m //= p
                    f += 1
                if m != 1:
                    raise ValueError(f"{q} is not a prime power")
                return cls(p, f)
        raise AssertionError("unreachable")


def _poly_is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """``coeffs`` are c_0..c_{f-1} of the monic polynomial x^f + ... + c_0."""
    f = len(coeffs)
    # a reducible polynomial of degree f has a monic factor of degree <= f // 2
    for deg in range(1, f // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if _poly_divides(low + (1,), coeffs + (1,), p):
                return False
    return True


def _poly_divides(d: tuple[int, ...], n: tuple[int, ...], p: int) -> bool:
    rem = list(n)
    dd = len(d) - 1
    for top in range(len(rem) - 1, dd - 1, -1):
        c = rem[top]
        if c:
            for k in range(dd + 1):
                rem[top - dd + k] = (rem[top - dd + k] - c * d[k]) % p
    return not any(rem[:dd])


def least_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``f``, compared on (c_{f-1}, ..., c_0)."""
    if f == 1:
        return (0,)
    for high_first in itertools.product(range(p), repeat=f):
        coeffs = tuple(reversed(high_first))
        if coeffs[0] == 0:
            continue
        if _poly_is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError(f"no irreducible polynomial of degree {f} over GF({p})")


class Field:
    """Arithmetic tables for GF(q)."""

    def __init__(self, pp: PrimePower):
        self.pp = pp
        p, f, q = pp.p, pp.f, pp.q
        self.p, self.f, self.q = p, f, q
        self.modulus = least_irreducible(p, f)
        vecs = [self._to_vec(a) for a in range(q)]
        self.add_table = [
            [self._from_vec([(x + y) % p for x, y in zip(va, vb)]) for vb in vecs] for va in vecs
        ]
        self.mul_table = [[self._vec_mul(va, vb) for vb in vecs] for va in vecs]
        self.neg_table = [self._from_vec([(-x) % p for x in v]) for v in vecs]
        self.inv_table = [0] * q
        for a in range(1, q):
            row = self.mul_table[a]
            self.inv_table[a] = row.index(1)
        self.primitive = self._find_primitive()

    def _to_vec(self, a: int) -> list[int]:
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return out

    def _from_vec(self, v) -> int:
        a = 0
        for c in reversed(v):
            a = a * self.p + c
        return a

    def _vec_mul(self, va, vb) -> int:
        p, f = self.p, self.f
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(va):
            if x:
                for j, y in enumerate(vb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce with x^f = -(c_0 + ... + c_{f-1} x^{f-1})
        for top in range(len(prod) - 1, f - 1, -1):
            c = prod[top]
            if c:
                prod[top] = 0
                for k, m in enumerate(self.modulus):
                    prod[top - f + k] = (prod[top - f + k] - c * m) % p
        return self._from_vec(prod[:f])

    def _find_primitive(self) -> int:
        for a in range(1, self.q):
            if self.mult_order(a) == self.q - 1:
                return a
        raise AssertionError("multiplicative group not cyclic")

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul_table[a][self.inv(b)]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = 1
        while k:
            if k & 1:
                result = self.mul_table[result][a]
            a = self.mul_table[a][a]
            k >>= 1
        return result

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 is not a unit")
        k, x = 1, a
        while x != 1:
            x = self.mul_table[x][a]
            k += 1
        return k

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        return f"GF({self.q})"


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, f: int) -> Field:
    return Field(PrimePower(p, f))


def field(q: "int | PrimePower") -> Field:
    pp = q if isinstance(q, PrimePower) else PrimePower.of(q)
    return _field_cached(pp.p, pp.f)


@dataclass(frozen=True)
class Mat:
    """Square matrix over a :class:`Field`; rows of int labels."""

    F: Field
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, F: Field, rows) -> "Mat":
        return cls(F, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, F: Field, n: int) -> "Mat":
        return cls(F, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "Mat") -> "Mat":
        F = self.F
        add, mul = F.add_table, F.mul_table
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = 0
                for x, y in zip(r, c):
                    s = add[s][mul[x][y]]
                row.append(s)
            out.append(tuple(row))
        return Mat(F, tuple(out))

    def apply_row(self, v) -> tuple[int, ...]:
        """Row vector times matrix."""
        F = self.F
        add, mul = F.add_table, F.mul_table
        out = []
        for j in range(self.n):
            s = 0
            for i, x in enumerate(v):
                s = add[s][mul[x][self.rows[i][j]]]
            out.append(s)
        return tuple(out)

    def det(self) -> int:
        F = self.F
        m = [list(r) for r in self.rows]
        n = self.n
        d = 1
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col]), None)
            if piv is None:
                return 0
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                d = F.neg(d)
            d = F.mul(d, m[col][col])
            pinv = F.inv(m[col][col])
            for r in range(col + 1, n):
                if m[r][col]:
                    factor = F.mul(m[r][col], pinv)
                    m[r] = [F.sub(a, F.mul(factor, b)) for a, b in zip(m[r], m[col])]
        return d
