"""Finite fields F_q = F_p[x]/(m(x)).

Elements are dense coefficient vectors in the power basis 1, x, ..., x^{m-1}.
Internally every element also has an integer *code* ``sum(c_i * p**i)``; the
prime subfield occupies codes ``0..p-1``.  Addition and multiplication tables
indexed by code are derived once per field from the coefficient arithmetic and
are what the numeric kernels consume.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DegreeZero,
    InvalidOmega,
    DivisionByZero,
    NotPrime,
    ParseError,
    Reducible,
    SpecMismatch,
    ZeroElement,
)

# Default moduli (constant term first) for the non-prime fields used by the CLI.
CATALOG: dict[int, tuple[int, tuple[int, ...]]] = {
    4: (2, (1, 1, 1)),  # x^2 + x + 1
    8: (2, (1, 0, 1, 1)),  # x^3 + x^2 + 1
    9: (3, (1, 0, 1)),  # x^2 + 1
    16: (2, (1, 1, 0, 0, 1)),  # x^4 + x + 1
    25: (5, (2, 1, 1)),  # x^2 + x + 2
    27: (3, (1, 2, 0, 1)),  # x^3 + 2x + 1
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# --- polynomials over F_p as lists, constant term first -------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    lead_inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _xpow_mod(e: int, m: list[int], p: int) -> list[int]:
    result, base = [1], [0, 1]
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(p: int, modulus: Sequence[int]) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    A degree-m polynomial is reducible iff it has a factor of degree i <= m/2,
    iff gcd(x^{p^i} - x, m) != 1 for some such i.
    """
    m = _trim([c % p for c in modulus])
    deg = len(m) - 1
    for i in range(1, deg // 2 + 1):
        h = _xpow_mod(p**i, m, p)
        h = h + [0] * max(0, 2 - len(h))
        h[1] = (h[1] - 1) % p
        if len(_pgcd(m, _trim(h), p)) > 1:
            return False
    return True


# --- the field ------------------------------------------------------------


@dataclass(frozen=True)
class GF:
    """A finite field F_p[x]/(modulus).  Build with :func:`make_field`."""

    p: int
    modulus: tuple[int, ...]
    m: int = field(init=False)
    q: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", len(self.modulus) - 1)
        object.__setattr__(self, "q", self.p ** (len(self.modulus) - 1))

    def __repr__(self) -> str:
        return f"GF(p={self.p}, modulus={list(self.modulus)}, q={self.q})"

    # code <-> coefficient vector
    def coeffs_of(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def code_of(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + (c % self.p)
        return code

    def _mul_coeffs(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        r = _pmod(_pmul(list(a), list(b), self.p), list(self.modulus), self.p)
        return tuple(r + [0] * (self.m - len(r)))

    # tables -- python lists for scalar code, numpy arrays for kernels
    @cached_property
    def add_list(self) -> list[list[int]]:
        q, cs = self.q, [self.coeffs_of(i) for i in range(self.q)]
        return [[self.code_of([x + y for x, y in zip(cs[a], cs[b])]) for b in range(q)] for a in range(q)]

    @cached_property
    def mul_list(self) -> list[list[int]]:
        q, cs = self.q, [self.coeffs_of(i) for i in range(self.q)]
        return [[self.code_of(self._mul_coeffs(cs[a], cs[b])) for b in range(q)] for a in range(q)]

    @cached_property
    def neg_list(self) -> list[int]:
        return [self.code_of([-c for c in self.coeffs_of(a)]) for a in range(self.q)]

    @cached_property
    def inv_list(self) -> list[int]:
        inv = [-1] * self.q
        for a in range(1, self.q):
            row = self.mul_list[a]
            inv[a] = row.index(1)
        return inv

    @cached_property
    def add_table(self) -> np.ndarray:
        return np.array(self.add_list, dtype=np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        return np.array(self.mul_list, dtype=np.int64)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array(self.neg_list, dtype=np.int64)

    @cached_property
    def inv_table(self) -> np.ndarray:
        inv = np.array(self.inv_list, dtype=np.int64)
        inv[0] = 0
        return inv

    @cached_property
    def sub_table(self) -> np.ndarray:
        return self.add_table[:, self.neg_table]

    # scalar code arithmetic
    def add(self, a: int, b: int) -> int:
        return self.add_list[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_list[a][self.neg_list[b]]

    def neg(self, a: int) -> int:
        return self.neg_list[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_list[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.inv_list[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul_list[result][a]
            a = self.mul_list[a][a]
            e >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Code of the integer n viewed in the prime subfield."""
        return n % self.p

    # element-level API
    def __call__(self, value: "int | Sequence[int] | str | FieldElement") -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise SpecMismatch("element belongs to another field")
            return value
        if isinstance(value, str):
            return parse_element(self, value)
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, self.coeffs_of(int(value) % self.p))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) != self.m:
            raise SpecMismatch(f"expected {self.m} coefficients, got {len(coeffs)}")
        return FieldElement(self, tuple(coeffs))

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, self.coeffs_of(code))

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    @property
    def gen(self) -> "FieldElement":
        """The class of x (for a prime field, x reduces to the constant root of the modulus)."""
        return self.element(self.code_of(_pmod([0, 1], list(self.modulus), self.p) + [0] * self.m))

    def elements(self) -> Iterator["FieldElement"]:
        """All elements in canonical order: lexicographic on coefficient vectors."""
        for code in self.ordered_codes:
            yield self.element(code)

    @cached_property
    def ordered_codes(self) -> tuple[int, ...]:
        return tuple(sorted(range(self.q), key=self.coeffs_of))

    def describe(self) -> dict:
        return {"p": self.p, "modulus": list(self.modulus), "q": self.q}


def make_field(p: int, modulus: Sequence[int]) -> GF:
    """Validate ``(p, modulus)`` and return the field.

    ``modulus`` lists the coefficients of a monic polynomial, constant term
    first; entries are reduced mod p (so ``-1`` is accepted).
    """
    if not is_prime(p):
        raise NotPrime(p)
    mod = [int(c) % p for c in modulus]
    _trim(mod)
    if len(mod) <= 1:
        raise DegreeZero(f"modulus {list(modulus)} has degree < 1")
    if mod[-1] != 1 or len(mod) != len(list(modulus)):
        raise ValueError(f"modulus {list(modulus)} is not monic mod {p}")
    if not is_irreducible(p, mod):
        raise Reducible(f"{list(modulus)} is reducible over F_{p}")
    return GF(p, tuple(mod))


def prime_field(p: int) -> GF:
    return make_field(p, (0, 1))


def catalog_field(q: int) -> GF:
    """Field of order q: F_p for prime q, else the built-in modulus."""
    if is_prime(q):
        return prime_field(q)
    if q not in CATALOG:
        raise ValueError(f"no catalog modulus for q={q}; pass --p/--modulus")
    return make_field(*CATALOG[q])


def catalog_orders(max_q: int) -> list[int]:
    out = [n for n in range(3, max_q + 1) if is_prime(n) or n in CATALOG]
    return out


# --- elements -------------------------------------------------------------


@dataclass(frozen=True)
class FieldElement:
    field: GF
    coeffs: tuple[int, ...]

    @property
    def code(self) -> int:
        return self.field.code_of(self.coeffs)

    def _other(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise SpecMismatch("operands live in different fields")
            return other.code
        if isinstance(other, (int, np.integer)):
            return self.field.from_int(int(other))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field.element(self.field.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field.element(self.field.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field.element(self.field.sub(o, self.code))

    def __neg__(self):
        return self.field.element(self.field.neg(self.code))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field.element(self.field.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * inv(self.field.element(self._other(other)))

    def __pow__(self, e: int):
        return self.field.element(self.field.pow(self.code, e))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"FieldElement({format_element(self)!r}, q={self.field.q})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.code == 1


def _check_pair(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise SpecMismatch("operands live in different fields")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_pair(a, b)
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_pair(a, b)
    return a - b


def neg(a: FieldElement) -> FieldElement:
    return -a


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_pair(a, b)
    return a * b


def inv(a: FieldElement) -> FieldElement:
    if a.is_zero():
        raise DivisionByZero("inverse of zero")
    return a.field.element(a.field.inv(a.code))


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def frobenius(a: FieldElement) -> FieldElement:
    return a**a.field.p


def element_order(a: FieldElement) -> int:
    """Multiplicative order of a nonzero element."""
    if a.is_zero():
        raise ZeroElement("order of zero is undefined")
    f, c = a.field, a.code
    n, x = 1, c
    while x != 1:
        x = f.mul(x, c)
        n += 1
    return n


@dataclass(frozen=True)
class Omega:
    """The Alexander parameter; never 0 or 1."""

    value: FieldElement

    def __post_init__(self) -> None:
        if self.value.is_zero() or self.value.is_one():
            raise InvalidOmega("omega must be neither 0 nor 1")

    @property
    def field(self) -> GF:
        return self.value.field

    @property
    def code(self) -> int:
        return self.value.code

    @cached_property
    def order(self) -> int:
        return element_order(self.value)

    def __str__(self) -> str:
        return format_element(self.value)


def omega_pow_is_one(omega: Omega | FieldElement, d: int) -> bool:
    value = omega.value if isinstance(omega, Omega) else omega
    return d % element_order(value) == 0


# --- text grammar ---------------------------------------------------------

_TERM = re.compile(r"^(?:(\d+)\*?)?(g(?:\^(\d+))?)?$")


def format_element(a: FieldElement) -> str:
    parts = []
    for k in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
            continue
        var = "g" if k == 1 else f"g^{k}"
        parts.append(var if c == 1 else f"{c}*{var}")
    return "+".join(parts) if parts else "0"


def parse_element(f: GF, text: str) -> FieldElement:
    """Parse ``0 | 3 | g | g^k | c*g^k | sums`` (``-`` allowed) into an element of f.

    Powers of g are reduced through the field arithmetic, so ``g^5`` is valid
    even when the degree is smaller.
    """
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty element")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"[+-][^+-]*", s)
    if "".join(pieces) != s:
        raise ParseError(f"cannot parse {text!r}")
    total, g = 0, f.gen.code
    for piece in pieces:
        sign, body = piece[0], piece[1:]
        mt = _TERM.match(body)
        if not body or mt is None or (mt.group(1) is None and mt.group(2) is None):
            raise ParseError(f"cannot parse term {piece!r} in {text!r}")
        coef = int(mt.group(1)) if mt.group(1) is not None else 1
        if mt.group(2) is None:
            term = f.from_int(coef)
        else:
            k = int(mt.group(3)) if mt.group(3) is not None else 1
            term = f.mul(f.from_int(coef), f.pow(g, k))
        total = f.sub(total, term) if sign == "-" else f.add(total, term)
    return f.element(total)


__all__ = [
    "CATALOG",
    "GF",
    "FieldElement",
    "Omega",
    "add",
    "catalog_field",
    "catalog_orders",
    "element_order",
    "format_element",
    "frobenius",
    "inv",
    "is_irreducible",
    "is_prime",
    "make_field",
    "mul",
    "neg",
    "omega_pow_is_one",
    "parse_element",
    "power",
    "prime_field",
    "sub",
]
