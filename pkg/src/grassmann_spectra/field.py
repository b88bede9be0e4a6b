"""Arithmetic in GF(q), q = p^m.

Elements are stored as integer codes ``c_0 + c_1 p + ... + c_{m-1} p^(m-1)``
where ``c_i`` is the coefficient of ``x^i`` in the polynomial representative.
:class:`FieldElement` wraps a code for callers that want operator syntax;
the linear algebra layers work on the raw codes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

MAX_ORDER = 2**20
TABLE_LIMIT = 256


class FieldError(ValueError):
    """Invalid field parameters."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``, or raise :class:`FieldError`."""
    if q < 2:
        raise FieldError(f"q={q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise FieldError(f"q={q} is not a prime power")
    return p, m


# -- polynomials over GF(p): coefficient lists, low degree first, no trailing zeros


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv_lead % p
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return _trim(quot), a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not _poly_divmod(list(poly), divisor, p)[1]:
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m (low degree first)."""
    for low in itertools.product(range(p), repeat=m):
        poly = tuple(low) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) defined by a monic irreducible ``modulus`` (low degree first)."""

    p: int
    m: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise FieldError(f"p={self.p} is not prime")
        if self.m < 1:
            raise FieldError(f"m={self.m} must be >= 1")
        if self.p**self.m > MAX_ORDER:
            raise FieldError(f"q={self.p}^{self.m} exceeds the bound {MAX_ORDER}")
        mod = tuple(self.modulus)
        if len(mod) != self.m + 1 or mod[-1] != 1 or any(not 0 <= c < self.p for c in mod):
            raise FieldError(f"modulus {mod} is not a monic degree-{self.m} polynomial")
        if not _is_irreducible(mod, self.p):
            raise FieldError(f"modulus {mod} is reducible over GF({self.p})")
        object.__setattr__(self, "modulus", mod)

    @property
    def q(self) -> int:
        return self.p**self.m

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.m == 1 else f"GF({self.p}^{self.m}; {self.modulus})"

    # -- codes <-> coefficient vectors

    def to_coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        if len(coeffs) != self.m:
            raise FieldError(f"expected {self.m} coefficients, got {len(coeffs)}")
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + (c % self.p)
        return code

    def element(self, value) -> FieldElement:
        """Wrap an integer code or a coefficient sequence."""
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise FieldError(f"code {value} outside GF({self.q})")
            return FieldElement(self, value)
        return FieldElement(self, self.from_coeffs(tuple(value)))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @cached_property
    def ordered_codes(self) -> tuple[int, ...]:
        """All element codes, ordered lexicographically by coefficient vector."""
        return tuple(sorted(range(self.q), key=self.to_coeffs))

    # -- scalar arithmetic on codes

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self._tables is not None:
            return self._tables[0][a * self.q + b]
        return self.from_coeffs([(x + y) % self.p for x, y in zip(self.to_coeffs(a), self.to_coeffs(b))])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        return self.from_coeffs([-x % self.p for x in self.to_coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if self._tables is not None:
            return self._tables[1][a * self.q + b]
        return self._poly_mul_code(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        if self.m == 1:
            return pow(a, -1, self.p)
        if self._tables is not None:
            return self._tables[2][a]
        return self._poly_inv_code(a)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def _poly_mul_code(self, a: int, b: int) -> int:
        prod = _poly_mul(_trim(list(self.to_coeffs(a))), _trim(list(self.to_coeffs(b))), self.p)
        rem = _poly_divmod(prod, list(self.modulus), self.p)[1]
        return self.from_coeffs(rem + [0] * (self.m - len(rem)))

    def _poly_inv_code(self, a: int) -> int:
        # extended Euclid: track s with s*a = r (mod modulus)
        p = self.p
        r0, r1 = list(self.modulus), _trim(list(self.to_coeffs(a)))
        s0, s1 = [], [1]
        while r1:
            quot, rem = _poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1, p), p)
        # r0 is a nonzero constant since the modulus is irreducible
        c = pow(r0[0], -1, p)
        s = [x * c % p for x in s0]
        s = _poly_divmod(s, list(self.modulus), p)[1]
        return self.from_coeffs(s + [0] * (self.m - len(s)))

    @cached_property
    def _tables(self) -> tuple[list[int], list[int], list[int]] | None:
        if self.m == 1 or self.q > TABLE_LIMIT:
            return None
        q = self.q
        add = [0] * (q * q)
        mul = [0] * (q * q)
        coeffs = [self.to_coeffs(a) for a in range(q)]
        for a in range(q):
            for b in range(q):
                add[a * q + b] = self.from_coeffs([(x + y) % self.p for x, y in zip(coeffs[a], coeffs[b])])
                mul[a * q + b] = self._poly_mul_code(a, b)
        inv = [0] + [self._poly_inv_code(a) for a in range(1, q)]
        return add, mul, inv

    # -- vectorised tables (numpy), available for q <= TABLE_LIMIT

    @property
    def has_tables(self) -> bool:
        return self.q <= TABLE_LIMIT

    @cached_property
    def np_tables(self) -> dict[str, np.ndarray]:
        """``add``, ``sub``, ``mul`` as q x q arrays and ``inv`` as a length-q array."""
        if not self.has_tables:
            raise FieldError(f"tables are only built for q <= {TABLE_LIMIT}")
        q = self.q
        a, b = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
        if self.m == 1:
            add, sub, mul = (a + b) % q, (a - b) % q, (a * b) % q
        else:
            add_l, mul_l, _ = self._tables
            add = np.array(add_l).reshape(q, q)
            mul = np.array(mul_l).reshape(q, q)
            neg = np.array([self.neg(x) for x in range(q)])
            sub = add[a, neg[b]]
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = [self.inv(x) for x in range(1, q)]
        return {
            "add": add.astype(np.int64),
            "sub": sub.astype(np.int64),
            "mul": mul.astype(np.int64),
            "inv": inv,
        }


def make_field(p: int, m: int = 1) -> FieldSpec:
    """Build GF(p^m) using the lexicographically smallest irreducible modulus."""
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if m < 1:
        raise FieldError(f"m={m} must be >= 1")
    if p**m > MAX_ORDER:
        raise FieldError(f"q={p}^{m} exceeds the bound {MAX_ORDER}")
    return FieldSpec(p, m, smallest_irreducible(p, m))


def field_of_order(q: int) -> FieldSpec:
    return make_field(*factor_prime_power(q))


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.to_coeffs(self.code)

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldError(f"mixing elements of {self.field!r} and {other.field!r}")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.code, other.code))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.div(self.code, other.code))

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inv() ** (-e)
        out, base = 1, self.code
        while e:
            if e & 1:
                out = self.field.mul(out, base)
            base = self.field.mul(base, base)
            e >>= 1
        return FieldElement(self.field, out)

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __repr__(self) -> str:
        return f"{self.field!r}({self.coeffs})" if self.field.m > 1 else f"GF({self.field.q})({self.code})"
