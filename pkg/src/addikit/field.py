"""Exact arithmetic in finite fields GF(p^m).

Elements are integers in ``[0, p^m)`` whose base-``p`` digits, least
significant first, are the coefficients of a polynomial reduced modulo the
field's modulus.  The modulus is canonical for each ``(p, m)``: the
lexicographically smallest primitive monic polynomial, comparing coefficient
lists from the constant term upward.  Primitivity makes the class of ``x`` a
generator of the multiplicative group, so multiplication runs through
exp/log tables.

All arithmetic methods on :class:`FieldSpec` accept Python ints or numpy
integer arrays and broadcast like numpy ufuncs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from addikit.config import FIELD_SIZE_CAP
from addikit.errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    InvalidParams,
    NonPrimeCharacteristic,
)

_ADD_TABLE_MAX = 1 << 10


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p^m``; raise if ``q`` is not a prime power."""
    if q < 2:
        raise InvalidParams(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise InvalidParams(f"{q} is not a prime power")
    return p, m


# -- polynomials over F_p as little-endian coefficient lists -----------------


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    m = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # f is monic: x^m = -(f_0 + ... + f_{m-1} x^{m-1})
    for deg in range(len(prod) - 1, m - 1, -1):
        c = prod[deg]
        if c:
            for i in range(m):
                prod[deg - m + i] = (prod[deg - m + i] - c * f[i]) % p
            prod[deg] = 0
    out = prod[:m]
    return out + [0] * (m - len(out))


def _poly_pow_x(e: int, f: list[int], p: int) -> list[int]:
    m = len(f) - 1
    result = [1] + [0] * (m - 1)
    base = _poly_mulmod([0, 1], [1], f, p) if m > 1 else [(-f[0]) % p]
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def is_primitive_polynomial(coeffs: list[int] | tuple[int, ...], p: int) -> bool:
    """Whether the monic polynomial with little-endian ``coeffs`` is primitive.

    ``coeffs`` includes the leading 1.  The test checks that ``x`` has
    multiplicative order exactly ``p^m - 1`` modulo the polynomial, which also
    forces irreducibility: a reducible modulus has fewer than ``p^m - 1`` units.
    """
    f = list(coeffs)
    m = len(f) - 1
    if m < 1 or f[-1] != 1 or f[0] % p == 0:
        return False
    n = p**m - 1
    one = [1] + [0] * (m - 1)
    if _poly_pow_x(n, f, p) != one:
        return False
    return all(_poly_pow_x(n // r, f, p) != one for r in prime_factors(n))


@lru_cache(maxsize=None)
def canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=m):
        f = (*low, 1)
        if is_primitive_polynomial(f, p):
            return f
    raise AssertionError(f"no primitive polynomial of degree {m} over F_{p}")


# -- the field ---------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) with a fixed monic modulus (little-endian coefficients)."""

    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.m

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    @cached_property
    def _digit_weights(self) -> tuple[int, ...]:
        return tuple(self.p**i for i in range(self.m))

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        p, m, n = self.p, self.m, self.order
        exp = np.zeros(n - 1, dtype=np.int64)
        if m == 1:
            g = (-self.modulus[0]) % p
            cur = 1
            for i in range(n - 1):
                exp[i] = cur
                cur = cur * g % p
        else:
            top_w = p ** (m - 1)
            # reduction[c] = c * (-(f_0 + ... + f_{m-1} x^{m-1})) as a rep
            reduction = [
                sum(((-c * self.modulus[i]) % p) * p**i for i in range(m)) for c in range(p)
            ]
            cur = 1
            if p == 2:
                red = reduction[1]
                for i in range(n - 1):
                    exp[i] = cur
                    cur = ((cur << 1) ^ red) & (n - 1) if cur & top_w else cur << 1
            else:
                for i in range(n - 1):
                    exp[i] = cur
                    top = cur // top_w
                    cur = self._add_scalar((cur - top * top_w) * p, reduction[top])
        log = np.full(n, -1, dtype=np.int64)
        log[exp] = np.arange(n - 1, dtype=np.int64)
        if (log[1:] < 0).any():
            raise AssertionError(f"modulus {self.modulus} is not primitive")
        return exp, log

    @property
    def exp_table(self) -> np.ndarray:
        return self._tables[0]

    @property
    def log_table(self) -> np.ndarray:
        return self._tables[1]

    # -- elements ------------------------------------------------------------

    def __call__(self, rep) -> FieldElement:
        rep = int(rep)
        if not 0 <= rep < self.order:
            raise InvalidParams(f"{rep} is not an element of {self!r}")
        return FieldElement(self, rep)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The canonical primitive element (the class of ``x``)."""
        return FieldElement(self, int(self.exp_table[1 % (self.order - 1)]))

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def nonzero_in_generator_order(self) -> np.ndarray:
        """``g^0, g^1, ..., g^(order-2)`` for the canonical generator ``g``."""
        return self.exp_table.copy()

    def digits(self, a) -> np.ndarray:
        """Polynomial coefficients of ``a`` over F_p, shape ``a.shape + (m,)``."""
        a = np.asarray(a, dtype=np.int64)
        return np.stack([(a // w) % self.p for w in self._digit_weights], axis=-1)

    def from_digits(self, d) -> np.ndarray:
        d = np.asarray(d, dtype=np.int64) % self.p
        return (d * np.asarray(self._digit_weights, dtype=np.int64)).sum(axis=-1)

    # -- arithmetic (vectorised over reps) ------------------------------------

    def _add_scalar(self, a: int, b: int) -> int:
        p = self.p
        return sum(((a // w + b // w) % p) * w for w in self._digit_weights)

    @cached_property
    def _add_table(self) -> np.ndarray | None:
        """Full addition table for small odd-characteristic extensions."""
        if self.p == 2 or self.m == 1 or self.order > _ADD_TABLE_MAX:
            return None
        x = np.arange(self.order, dtype=np.int64)
        out = np.zeros((self.order, self.order), dtype=np.int64)
        for w in self._digit_weights:
            out += (((x // w)[:, None] + (x // w)[None, :]) % self.p) * w
        out.setflags(write=False)
        return out

    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b) if _is_array(a, b) else int(a) ^ int(b)
        if not _is_array(a, b):
            return self._add_scalar(int(a), int(b))
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        table = self._add_table
        if table is not None:
            return table[a, b]
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        for w in self._digit_weights:
            out += ((a // w + b // w) % self.p) * w
        return out

    def neg(self, a):
        if self.p == 2:
            return a
        arr = _is_array(a)
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            out = (-a) % self.p
        else:
            out = np.zeros(a.shape, dtype=np.int64)
            for w in self._digit_weights:
                out += ((-(a // w)) % self.p) * w
        return out if arr else int(out)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        arr = _is_array(a, b)
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            out = (a * b) % self.p
        else:
            exp, log = self._tables
            out = exp[(log[a] + log[b]) % (self.order - 1)]
            out = np.where((a == 0) | (b == 0), 0, out)
        return out if arr else int(out)

    def inv(self, a):
        arr = _is_array(a)
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise DivisionByZero(f"inverse of zero in {self!r}")
        exp, log = self._tables
        out = exp[(-log[a]) % (self.order - 1)]
        return out if arr else int(out)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        arr = _is_array(a)
        a = np.asarray(a, dtype=np.int64)
        e = int(e)
        exp, log = self._tables
        n1 = self.order - 1
        if e < 0 and (a == 0).any():
            raise DivisionByZero(f"negative power of zero in {self!r}")
        out = exp[(log[a] * (e % n1)) % n1]
        if e == 0:
            out = np.ones_like(a)
        else:
            out = np.where(a == 0, 0, out)
        return out if arr else int(out)

    # -- serialisation ---------------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj: dict) -> FieldSpec:
        f = field_create(int(obj["p"]), int(obj["m"]))
        if "modulus" in obj and tuple(obj["modulus"]) != f.modulus:
            raise InvalidParams(
                f"modulus {obj['modulus']} is not the canonical one {list(f.modulus)}"
            )
        return f


def _is_array(*xs) -> bool:
    return any(isinstance(x, np.ndarray) for x in xs)


def field_create(p: int, m: int = 1, cap: int | None = None) -> FieldSpec:
    """The canonical GF(p^m); repeated calls return the same object."""
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if m < 1:
        raise InvalidParams(f"extension degree must be >= 1, got {m}")
    cap = FIELD_SIZE_CAP if cap is None else cap
    if p**m > cap:
        raise FieldTooLarge(f"GF({p}^{m}) has {p**m} elements, cap is {cap}")
    return _field_create(p, m)


@lru_cache(maxsize=None)
def _field_create(p: int, m: int) -> FieldSpec:
    return FieldSpec(p, m, canonical_modulus(p, m))


def gf(q: int) -> FieldSpec:
    """The canonical field with ``q`` elements."""
    return field_create(*prime_power(q))


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    rep: int

    def _check(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.rep
        if isinstance(other, (int, np.integer)):
            return int(self.field(other).rep)
        return NotImplemented

    def __add__(self, other):
        o = self._check(other)
        return FieldElement(self.field, self.field.add(self.rep, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        return FieldElement(self.field, self.field.sub(self.rep, o))

    def __rsub__(self, other):
        o = self._check(other)
        return FieldElement(self.field, self.field.sub(o, self.rep))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.rep))

    def __mul__(self, other):
        o = self._check(other)
        return FieldElement(self.field, self.field.mul(self.rep, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        return FieldElement(self.field, self.field.div(self.rep, o))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.rep, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.rep))

    def __bool__(self) -> bool:
        return self.rep != 0

    def __int__(self) -> int:
        return self.rep

    def __repr__(self) -> str:
        return f"{self.field!r}({self.rep})"

    def to_json(self) -> dict:
        return {"rep": self.rep}


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def neg(x: FieldElement) -> FieldElement:
    return -x


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def pow(x: FieldElement, e: int) -> FieldElement:  # noqa: A001
    return x**e
