"""The polynomial quandle complex C*(q) of an Alexander quandle F_q[T]/(T - w).

C^n is the span of monomials U_1^{i_1} ... U_{n-1}^{i_{n-1}} T_n^{i_n} with
i_1, ..., i_{n-1} >= 1; C^n(q) additionally bounds every exponent by q - 1.
The differential preserves total degree, so everything is assembled per
(n, d) slice.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

from .errors import BadFiltration, NotInComplex, NotInFiltration
from .gf import GF, FieldElement, Omega
from .linalg import MatrixFq, rank
from .polyring import Monomial, Polynomial, divisible_by_omega_prefix, monomial_key, substitute_codes

INF = math.inf


@dataclass(frozen=True)
class ComplexCtx:
    field: GF
    omega: Omega

    @classmethod
    def create(cls, field: GF, omega: "FieldElement | str | int | Omega") -> "ComplexCtx":
        if isinstance(omega, Omega):
            return cls(field, omega)
        return cls(field, Omega(field(omega)))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def w(self) -> int:
        """Code of omega."""
        return self.omega.code

    def w_pow(self, e: int) -> int:
        return self.field.pow(self.omega.code, e)

    def omega_pow_is_one(self, d: int) -> bool:
        return d % self.omega.order == 0

    @cached_property
    def _delta_forms(self) -> dict[int, list[tuple[int, list[dict[int, int]]]]]:
        return {}

    def delta_forms(self, n: int) -> list[tuple[int, list[dict[int, int]]]]:
        """(sign code, forms) for every substitution in delta on arity n."""
        cache = self._delta_forms
        if n not in cache:
            cache[n] = _delta_forms(self.field, self.omega.code, n)
        return cache[n]


def _delta_forms(f: GF, w: int, n: int) -> list[tuple[int, list[dict[int, int]]]]:
    one, mone = 1, f.neg(1)
    out = []
    for i in range(n):  # 0-based position of the merged variable
        sign = one if i % 2 == 0 else mone
        acting = [{j: w} for j in range(i)] + [{i: w, i + 1: 1}] + [{j + 1: 1} for j in range(i + 1, n)]
        face = [{j: 1} for j in range(i)] + [{i: 1, i + 1: 1}] + [{j + 1: 1} for j in range(i + 1, n)]
        out.append((sign, acting))
        out.append((f.neg(sign), face))
    return out


def delta(ctx: ComplexCtx, f: Polynomial) -> Polynomial:
    """The quandle differential C^n -> C^{n+1}.

    delta(f) = sum_{i=1}^{n} (-1)^{i-1} [ f(wU_1, ..., wU_{i-1}, wU_i + U_{i+1}, U_{i+2}, ...)
                                        - f(U_1, ..., U_{i-1}, U_i + U_{i+1}, U_{i+2}, ...) ].
    """
    if not divisible_by_omega_prefix(f):
        raise NotInComplex("polynomial is not divisible by U_1 ... U_{n-1}")
    n = f.arity
    out = Polynomial.zero(ctx.field, n + 1)
    for sign, forms in ctx.delta_forms(n):
        out = out + substitute_codes(f, forms, n + 1).scale(ctx.field.element(sign))
    return out


# --- bases ----------------------------------------------------------------


def _basis(q: int, n: int, d: int | None) -> tuple[Monomial, ...]:
    ranges = [range(1, q)] * (n - 1) + [range(0, q)]
    if d is None:
        mons = list(itertools.product(*ranges))
    else:
        mons = [e for e in _compositions(n, d, q)]
    mons.sort(key=monomial_key, reverse=True)
    return tuple(mons)


def _compositions(n: int, d: int, q: int):
    """Exponent vectors of length n, U-exponents in [1, q-1], T-exponent in [0, q-1], summing to d."""
    if n == 1:
        if 0 <= d <= q - 1:
            yield (d,)
        return
    for a in range(1, min(q - 1, d) + 1):
        for rest in _compositions(n - 1, d - a, q):
            yield (a,) + rest


@lru_cache(maxsize=None)
def _basis_cached(q: int, n: int, d: int | None) -> tuple[Monomial, ...]:
    return _basis(q, n, d)


def basis_C(ctx: ComplexCtx | int, n: int, d: int | None = None) -> list[Monomial]:
    """Monomial basis of C^n_d(q) (all degrees when d is None), canonical order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    q = ctx if isinstance(ctx, int) else ctx.q
    return list(_basis_cached(q, n, d))


def degrees(q: int, n: int) -> range:
    """Total degrees that occur in C^n(q)."""
    return range(n - 1, n * (q - 1) + 1)


@dataclass
class CochainSlice:
    """C^n_d(q) with its basis and the matrix of delta into C^{n+1}_d(q)."""

    n: int
    d: int | None
    basis: list[Monomial]
    target_basis: list[Monomial]
    delta_matrix: MatrixFq = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)


def coordinates(basis: Sequence[Monomial], f: Polynomial, index: dict | None = None) -> list[int]:
    """Coordinates (codes) of f in a monomial basis; raises if f leaves the span."""
    index = index or {e: i for i, e in enumerate(basis)}
    v = [0] * len(basis)
    for e, c in f.terms.items():
        if e not in index:
            raise NotInComplex(f"monomial {e} outside the basis")
        v[index[e]] = c
    return v


@lru_cache(maxsize=4096)
def cochain_slice(ctx: ComplexCtx, n: int, d: int | None = None) -> CochainSlice:
    src = basis_C(ctx, n, d)
    tgt = basis_C(ctx, n + 1, d)
    index = {e: i for i, e in enumerate(tgt)}
    triples = []
    for j, e in enumerate(src):
        image = delta(ctx, Polynomial._raw(ctx.field, n, {e: 1}))
        for m, c in image.terms.items():
            triples.append((index[m], j, c))
    M = MatrixFq.from_triples(ctx.field, len(tgt), len(src), triples)
    return CochainSlice(n, d, src, tgt, M)


def delta_matrix(ctx: ComplexCtx, n: int, d: int | None = None) -> MatrixFq:
    return cochain_slice(ctx, n, d).delta_matrix


@lru_cache(maxsize=4096)
def _slice_rank(ctx: ComplexCtx, n: int, d: int) -> int:
    if n < 1:
        return 0
    return rank(delta_matrix(ctx, n, d))


def cohomology_dim(ctx: ComplexCtx, n: int, d: int | None = None) -> int:
    """dim H^n of C*(q) (or of the slice C*_d(q)), via rank-nullity per degree."""
    if d is None:
        return sum(cohomology_dim(ctx, n, dd) for dd in degrees(ctx.q, n))
    dim = len(basis_C(ctx, n, d))
    return dim - _slice_rank(ctx, n, d) - _slice_rank(ctx, n - 1, d)


# --- filtration and derivatives -------------------------------------------


def filtration_level(f: Polynomial) -> float:
    """Largest s with every T_n exponent divisible by p^s (inf if T_n is absent)."""
    p = f.field.p
    level = INF
    for e in f.terms:
        t = e[-1]
        if t == 0:
            continue
        v = 0
        while t % p == 0:
            t //= p
            v += 1
        level = min(level, v)
    return level


def D_s(f: Polynomial, s: int) -> Polynomial:
    """sum f_a T^{a p^s}  ->  sum (a f_a) T^{(a-1) p^s}."""
    ps = f.field.p**s
    fld = f.field
    out: dict[Monomial, int] = {}
    for e, c in f.terms.items():
        if e[-1] % ps:
            raise NotInFiltration(f"T exponent {e[-1]} not divisible by p^{s}")
        a = e[-1] // ps
        k = fld.mul(fld.from_int(a), c)
        if k == 0:
            continue
        m = e[:-1] + ((a - 1) * ps,)
        v = fld.add(out.get(m, 0), k)
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return Polynomial._raw(fld, f.arity, out)


def P_set(s: int, q: int, omega: Omega | None = None, p: int | None = None) -> set[int]:
    """{p^t : 0 <= t < s} u {b p^s : 0 < b p^s < q, b != -1 (mod p) or b = p - 1}.

    Membership does not depend on omega; passing it is just a way to supply p.
    """
    if p is None:
        if omega is None:
            raise ValueError("need p or omega")
        p = omega.field.p
    ps = p**s
    if ps >= q:
        raise BadFiltration(f"p^s = {ps} >= q = {q}")
    out = {p**t for t in range(s)}
    b = 1
    while b * ps < q:
        if b % p != p - 1 or b == p - 1:
            out.add(b * ps)
        b += 1
    return out


def lam(ctx: ComplexCtx, d: int) -> Polynomial:
    """lambda_d = T_1^d in C^1."""
    return Polynomial._raw(ctx.field, 1, {(d,): 1})
