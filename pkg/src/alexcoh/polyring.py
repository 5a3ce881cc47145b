"""Sparse multivariate polynomials over F_q.

A polynomial of arity n lives in F_q[U_1, ..., U_{n-1}, T_n].  Terms are kept in
a dict from exponent tuples to nonzero element codes.  The ring is never
truncated: exponents >= q are legal and membership in C^n(q) is a predicate.
"""
from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence, Union

from .errors import ArityMismatch, SpecMismatch
from .gf import GF, FieldElement, format_element

Monomial = tuple[int, ...]
Scalar = Union[FieldElement, int]
# A linear form maps target-variable index (0-based) to a coefficient.
LinearForm = Mapping[int, Scalar]


def binom_mod_p(n: int, k: int, p: int) -> int:
    """binom(n, k) mod p by Lucas' theorem (product over base-p digits)."""
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        out = out * math.comb(nd, kd) % p
        n //= p
        k //= p
    return out


def _scalar_code(field: GF, c: Scalar) -> int:
    if isinstance(c, FieldElement):
        if c.field != field:
            raise SpecMismatch("scalar from another field")
        return c.code
    return field.from_int(int(c))


def monomial_key(e: Monomial) -> tuple:
    """Sort key of the canonical order (use with reverse=True): graded lex, U_1 > ... > T_n."""
    return (sum(e), e)


def var_names(n: int) -> list[str]:
    return [f"U{i}" for i in range(1, n)] + [f"T{n}"]


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to codes."""

    __slots__ = ("field", "arity", "terms")

    def __init__(self, field: GF, arity: int, terms: Mapping[Monomial, Scalar] | None = None) -> None:
        if arity < 1:
            raise ArityMismatch("arity must be >= 1")
        clean: dict[Monomial, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != arity or min(e) < 0:
                raise ArityMismatch(f"bad exponent vector {e} for arity {arity}")
            code = _scalar_code(field, c)
            if code:
                clean[e] = code
        self.field = field
        self.arity = arity
        self.terms = clean

    @classmethod
    def _raw(cls, field: GF, arity: int, terms: dict[Monomial, int]) -> "Polynomial":
        p = cls.__new__(cls)
        p.field, p.arity, p.terms = field, arity, terms
        return p

    @classmethod
    def zero(cls, field: GF, arity: int) -> "Polynomial":
        return cls._raw(field, arity, {})

    @classmethod
    def monomial(cls, field: GF, exps: Sequence[int], coef: Scalar = 1) -> "Polynomial":
        return cls(field, len(exps), {tuple(exps): coef})

    @classmethod
    def constant(cls, field: GF, arity: int, c: Scalar = 1) -> "Polynomial":
        return cls(field, arity, {(0,) * arity: c})

    # -- inspection
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, e: Sequence[int]) -> FieldElement:
        return self.field.element(self.terms.get(tuple(e), 0))

    def monomials(self) -> list[Monomial]:
        """Monomials in canonical (descending graded lex) order."""
        return sorted(self.terms, key=monomial_key, reverse=True)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def max_exponent(self) -> int:
        return max((max(e) for e in self.terms), default=0)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.arity == other.arity and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self.terms.items())))

    def _check(self, other: "Polynomial") -> None:
        if other.arity != self.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
        if other.field != self.field:
            raise SpecMismatch("polynomials over different fields")

    # -- ring operations
    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        add = self.field.add_list
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = add[out.get(e, 0)][c]
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.field, self.arity, out)

    def __neg__(self) -> "Polynomial":
        neg = self.field.neg_list
        return Polynomial._raw(self.field, self.arity, {e: neg[c] for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: Scalar) -> "Polynomial":
        code = _scalar_code(self.field, c)
        if code == 0:
            return Polynomial.zero(self.field, self.arity)
        mul = self.field.mul_list[code]
        return Polynomial._raw(self.field, self.arity, {e: mul[v] for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return Polynomial._raw(self.field, self.arity, _mul_terms(self.field, self.terms, other.terms))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.field, self.arity)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, exps: Sequence[int]) -> "Polynomial":
        """Multiply by the monomial with exponent vector ``exps``."""
        return Polynomial._raw(
            self.field,
            self.arity,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def map_exponents(self, fn, arity: int | None = None) -> "Polynomial":
        """Rename variables: fn maps an exponent tuple to a new one; codes are summed."""
        arity = self.arity if arity is None else arity
        add = self.field.add_list
        out: dict[Monomial, int] = {}
        for e, c in self.terms.items():
            e2 = tuple(fn(e))
            s = add[out.get(e2, 0)][c]
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        return Polynomial._raw(self.field, arity, out)

    def evaluate(self, point: Sequence[Scalar]) -> FieldElement:
        f = self.field
        xs = [_scalar_code(f, x) for x in point]
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(xs, e):
                if k:
                    v = f.mul(v, f.pow(x, k))
            total = f.add(total, v)
        return f.element(total)

    # -- text
    def to_text(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else var_names(self.arity)
        if not self.terms:
            return "0"
        parts = []
        for e in self.monomials():
            coef = format_element(self.field.element(self.terms[e]))
            vs = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k]
            if not vs:
                parts.append(coef)
                continue
            if coef != "1":
                if "+" in coef:
                    coef = f"({coef})"
                vs.insert(0, coef)
            parts.append("*".join(vs))
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r}, q={self.field.q})"


def _mul_terms(field: GF, a: Mapping[Monomial, int], b: Mapping[Monomial, int]) -> dict[Monomial, int]:
    add, mul = field.add_list, field.mul_list
    out: dict[Monomial, int] = {}
    for ea, ca in a.items():
        row = mul[ca]
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = add[out.get(e, 0)][row[cb]]
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def p_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def p_scale(f: Polynomial, c: Scalar) -> Polynomial:
    return f.scale(c)


def p_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def _linear_power_terms(field: GF, c1: int, c2: int, a: int) -> list[tuple[int, int]]:
    """[(i, coef)] for (c1 X + c2 Y)^a = sum coef * X^{a-i} Y^i."""
    p = field.p
    out = []
    for i in range(a + 1):
        b = binom_mod_p(a, i, p)
        if b == 0:
            continue
        c = field.mul(field.from_int(b), field.mul(field.pow(c1, a - i), field.pow(c2, i)))
        if c:
            out.append((i, c))
    return out


def expand_linear_power(c1: Scalar, c2: Scalar, a: int, field: GF | None = None) -> Polynomial:
    """(c1*X + c2*Y)^a as a polynomial in two variables, binomials via Lucas."""
    if field is None:
        for c in (c1, c2):
            if isinstance(c, FieldElement):
                field = c.field
                break
        else:
            raise ValueError("field required when both coefficients are ints")
    k1, k2 = _scalar_code(field, c1), _scalar_code(field, c2)
    terms = {(a - i, i): c for i, c in _linear_power_terms(field, k1, k2, a)}
    return Polynomial._raw(field, 2, terms)


def _form_power(field: GF, form: dict[int, int], e: int, arity: int) -> dict[Monomial, int]:
    items = [(v, c) for v, c in form.items() if c]
    if not items:
        return {(0,) * arity: 1} if e == 0 else {}
    if len(items) == 1:
        (v, c), = items
        exps = [0] * arity
        exps[v] = e
        code = field.pow(c, e)
        return {tuple(exps): code} if code else {}
    if len(items) == 2:
        (v1, c1), (v2, c2) = items
        out = {}
        for i, c in _linear_power_terms(field, c1, c2, e):
            exps = [0] * arity
            exps[v1] += e - i
            exps[v2] += i
            out[tuple(exps)] = c
        return out
    # three or more terms: repeated multiplication
    base = {}
    for v, c in items:
        exps = [0] * arity
        exps[v] = 1
        base[tuple(exps)] = c
    result: dict[Monomial, int] = {(0,) * arity: 1}
    for _ in range(e):
        result = _mul_terms(field, result, base)
    return result


def substitute(f: Polynomial, forms: Sequence[LinearForm], arity: int | None = None) -> Polynomial:
    """Replace variable i of f by the linear form ``forms[i]`` and expand.

    A form maps 0-based target-variable indices to scalars, e.g. ``{0: w, 1: 1}``
    is ``w*U_1 + U_2``.  The result has ``arity`` variables (default f.arity).
    """
    if len(forms) != f.arity:
        raise ArityMismatch(f"{len(forms)} forms for arity {f.arity}")
    field = f.field
    arity = f.arity if arity is None else arity
    cforms = []
    for form in forms:
        cf = {}
        for v, c in form.items():
            if not 0 <= v < arity:
                raise ArityMismatch(f"target variable {v} outside arity {arity}")
            cf[v] = _scalar_code(field, c)
        cforms.append(cf)
    return substitute_codes(f, cforms, arity)


def substitute_codes(f: Polynomial, cforms: Sequence[dict[int, int]], arity: int) -> Polynomial:
    """:func:`substitute` with form coefficients already given as element codes."""
    field = f.field
    cache: dict[tuple[int, int], dict[Monomial, int]] = {}
    add = field.add_list
    out: dict[Monomial, int] = {}
    for e, c in f.terms.items():
        acc: dict[Monomial, int] = {(0,) * arity: c}
        for i, k in enumerate(e):
            if k == 0:
                continue
            key = (i, k)
            pw = cache.get(key)
            if pw is None:
                pw = cache[key] = _form_power(field, cforms[i], k, arity)
            acc = _mul_terms(field, acc, pw)
            if not acc:
                break
        for m, v in acc.items():
            s = add[out.get(m, 0)][v]
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return Polynomial._raw(field, arity, out)


def divisible_by_omega_prefix(f: Polynomial) -> bool:
    """Every monomial has positive exponent on U_1..U_{n-1}."""
    n = f.arity
    return all(all(x >= 1 for x in e[: n - 1]) for e in f.terms)


def in_Cn_q(f: Polynomial, q: int) -> bool:
    return divisible_by_omega_prefix(f) and all(max(e) <= q - 1 for e in f.terms)


def variables(field: GF, arity: int) -> list[Polynomial]:
    out = []
    for i in range(arity):
        exps = [0] * arity
        exps[i] = 1
        out.append(Polynomial.monomial(field, exps))
    return out


def from_terms(field: GF, arity: int, items: Iterable[tuple[Sequence[int], Scalar]]) -> Polynomial:
    p = Polynomial.zero(field, arity)
    for e, c in items:
        p = p + Polynomial.monomial(field, e, c)
    return p
