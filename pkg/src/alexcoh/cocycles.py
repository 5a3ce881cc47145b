"""Explicit cochain families in C*(q) and the enumerations built from them.

Constructors (``make_*``) accept any parameters; the enumerators are where the
w-power equations and inequalities are imposed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .complex import ComplexCtx
from .errors import (
    AdmissibilityViolation,
    NotDivisibleByP,
    NotPowerOfP,
    NotPrime,
    OmegaPrefixViolation,
    ParseError,
)
from .gf import GF, is_prime, prime_field
from .polyring import Polynomial, binom_mod_p, substitute_codes


def is_power_of(n: int, p: int) -> bool:
    if n < 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1


def powers_below(p: int, q: int) -> list[int]:
    out, x = [], 1
    while x < q:
        out.append(x)
        x *= p
    return out


# --- chi --------------------------------------------------------------------


def _chi_terms(field: GF) -> dict[tuple[int, int], int]:
    # (1/p) binom(p, i) computed in the integers before reducing mod p
    p = field.p
    out = {}
    for i in range(1, p):
        c = (_comb(p, i) // p) % p
        if c:
            out[(p - i, i)] = field.from_int(c)
    return out


def _comb(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


def chi(p: int | GF) -> Polynomial:
    """The Fermat-quotient polynomial (1/p)((x+y)^p - x^p - y^p) in two variables."""
    if isinstance(p, GF):
        field = p
    else:
        if not is_prime(p):
            raise NotPrime(p)
        field = prime_field(p)
    return Polynomial._raw(field, 2, _chi_terms(field))


def chi_by_sum(p: int) -> Polynomial:
    """sum_{i=1}^{p-1} (-1)^{i-1} i^{-1} x^{p-i} y^i, the other defining form of chi."""
    field = prime_field(p)
    terms = {}
    for i in range(1, p):
        c = pow(i, -1, p) * (1 if i % 2 else -1)
        terms[(p - i, i)] = c
    return Polynomial(field, 2, terms)


def _chi_sub(ctx: ComplexCtx, forms: list[dict[int, int]], arity: int) -> Polynomial:
    return substitute_codes(chi(ctx.field), forms, arity)


# --- constructors -------------------------------------------------------------


def make_F(ctx: ComplexCtx | GF, a: int, b: int, c: int = 0) -> Polynomial:
    """F(a, b, c) = U_1^a U_2^b T_3^c."""
    if a < 1 or b < 1:
        raise OmegaPrefixViolation(f"F({a},{b},{c}) is not divisible by U_1 U_2")
    if c < 0:
        raise ValueError("negative exponent")
    field = ctx.field if isinstance(ctx, ComplexCtx) else ctx
    return Polynomial._raw(field, 3, {(a, b, c): 1})


def make_G(ctx: ComplexCtx | GF, a: int, b: int, c: int, d: int = 0) -> Polynomial:
    """G(a, b, c, d) = U_1^a U_2^b U_3^c T_4^d."""
    if min(a, b, c) < 1:
        raise OmegaPrefixViolation(f"G({a},{b},{c},{d}) is not divisible by U_1 U_2 U_3")
    if d < 0:
        raise ValueError("negative exponent")
    field = ctx.field if isinstance(ctx, ComplexCtx) else ctx
    return Polynomial._raw(field, 4, {(a, b, c, d): 1})


def mu_difference(ctx: ComplexCtx, a: int, arity: int = 2) -> Polynomial:
    """mu_a(wU_1, U_2) - mu_a(U_1, U_2) in the first two of ``arity`` variables,
    where mu_a(x, y) = (x + y)^a - x^a - y^a."""
    f, w = ctx.field, ctx.w
    base = Polynomial._raw(f, 1, {(a,): 1})
    pad = arity - 2
    zero = (0,) * pad
    lin1 = substitute_codes(base, [{0: w, 1: 1}], arity)
    lin2 = substitute_codes(base, [{0: 1, 1: 1}], arity)
    u1a = Polynomial._raw(f, arity, {(a, 0) + zero: f.sub(1, ctx.w_pow(a))})
    return lin1 - lin2 + u1a


def make_Psi(ctx: ComplexCtx, a: int, b: int) -> Polynomial:
    """((wU_1 + U_2)^a - (U_1 + U_2)^a + (1 - w^a) U_1^a) T_3^b."""
    if a < 1 or b < 1:
        raise ValueError("Psi needs a, b >= 1")
    return mu_difference(ctx, a, 3).shift((0, 0, b))


def make_E0(ctx: ComplexCtx, ap: int, b: int) -> Polynomial:
    """(chi(wU_1, U_2) - chi(U_1, U_2))^a T_3^b, first argument a*p."""
    p = ctx.p
    if ap < 1 or ap % p:
        raise NotDivisibleByP(f"E0 first parameter {ap} is not a positive multiple of {p}")
    if b < 0:
        raise ValueError("negative exponent")
    w = ctx.w
    h = _chi_sub(ctx, [{0: w}, {1: 1}], 3) - _chi_sub(ctx, [{0: 1}, {1: 1}], 3)
    return (h ** (ap // p)).shift((0, 0, b))


def make_E1(ctx: ComplexCtx, a: int, bp: int) -> Polynomial:
    """U_1^a (chi(U_2, T_3) - chi(U_2, w^{-1} T_3))^b, second argument b*p."""
    p = ctx.p
    if a < 1:
        raise OmegaPrefixViolation("E1 needs a >= 1")
    if bp < 1 or bp % p:
        raise NotDivisibleByP(f"E1 second parameter {bp} is not a positive multiple of {p}")
    winv = ctx.field.inv(ctx.w)
    h = _chi_sub(ctx, [{1: 1}, {2: 1}], 3) - _chi_sub(ctx, [{1: 1}, {2: winv}], 3)
    return (h ** (bp // p)).shift((a, 0, 0))


def make_Lambda(ctx: ComplexCtx | GF, d: int) -> Polynomial:
    """lambda_d = T_1^d."""
    if d < 0:
        raise ValueError("negative exponent")
    field = ctx.field if isinstance(ctx, ComplexCtx) else ctx
    return Polynomial._raw(field, 1, {(d,): 1})


def make_J2(ctx: ComplexCtx | GF, a: int, b: int) -> Polynomial:
    """U_1^a T_2^b."""
    if a < 1:
        raise OmegaPrefixViolation("J2 needs a >= 1")
    field = ctx.field if isinstance(ctx, ComplexCtx) else ctx
    return Polynomial._raw(field, 2, {(a, b): 1})


# --- quadruples and Gamma ---------------------------------------------------------


@dataclass(frozen=True)
class QQuadruple:
    q1: int
    q2: int
    q3: int
    q4: int
    case: int

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.q1, self.q2, self.q3, self.q4)


def _case_predicates(ctx: ComplexCtx, q1: int, q2: int, q3: int, q4: int) -> dict[int, bool]:
    one = ctx.omega_pow_is_one
    p = ctx.p
    w_eq = ctx.w_pow(q1) == ctx.w_pow(q2)
    return {
        1: one(q1 + q2),
        2: not one(q1 + q2) and q3 > q4,
        3: p != 2 and not one(q1 + q2) and q3 == q4,
        4: p != 2 and not one(q1 + q2) and q2 <= q1 < q3 < q4 and w_eq,
        5: p == 2 and not one(q1 + q2) and q2 < q1 < q3 < q4 and w_eq,
    }


def admissible_base(ctx: ComplexCtx, q1: int, q2: int, q3: int, q4: int) -> bool:
    one = ctx.omega_pow_is_one
    return q2 <= q3 and q1 < q3 and q2 < q4 and one(q1 + q3) and one(q2 + q4)


def classify_quadruple(ctx: ComplexCtx, q1: int, q2: int, q3: int, q4: int) -> QQuadruple | None:
    """The case (1-5) of a quadruple of powers of p, or None when it is not admissible."""
    for x in (q1, q2, q3, q4):
        if not is_power_of(x, ctx.p):
            raise NotPowerOfP(f"{x} is not a power of {ctx.p}")
    if not admissible_base(ctx, q1, q2, q3, q4):
        return None
    for case, ok in _case_predicates(ctx, q1, q2, q3, q4).items():
        if ok:
            return QQuadruple(q1, q2, q3, q4, case)
    return None


def make_Gamma(ctx: ComplexCtx, quad: QQuadruple) -> Polynomial:
    f = ctx.field
    q1, q2, q3, q4 = quad.params
    F = lambda a, b, c: make_F(ctx, a, b, c)  # noqa: E731
    base = F(q1, q2 + q3, q4)
    if quad.case == 1:
        return base
    if quad.case == 2:
        coef = f.mul(f.inv(f.sub(ctx.w_pow(q2), 1)), f.sub(1, ctx.w_pow(q1 + q2)))
        corr = F(q1, q2, q3 + q4) - F(q1 + q2, q4, q3)
        return base - F(q2, q1 + q4, q3) - corr.scale(f.element(coef))
    if quad.case == 3:
        # delta F(q1,q2+q3,q4) = -(w^{q1+q2}-1) G and delta F(q1,q2,2q3) = 2(w^{q1}-1) G
        # with w^{q2} = w^{q1} = w^{-q3}; the correction that cancels them is +2^{-1}(1+w^{-q3}).
        coef = f.mul(f.inv(f.from_int(2)), f.add(1, ctx.w_pow(-q3)))
        return base + F(q1, q2, q3 + q4).scale(f.element(coef))
    if quad.case in (4, 5):
        coef = f.mul(f.inv(f.sub(ctx.w_pow(q1), 1)), f.sub(1, ctx.w_pow(2 * q1)))
        return base + F(q2, q1 + q3, q4) - F(q1 + q2, q3, q4).scale(f.element(coef))
    raise AdmissibilityViolation(f"unknown case {quad.case}")


def enumerate_Q(ctx: ComplexCtx, q: int | None = None) -> list[QQuadruple]:
    q = ctx.q if q is None else q
    pw = powers_below(ctx.p, q)
    out = []
    for q1 in pw:
        for q2 in pw:
            for q3 in pw:
                for q4 in pw:
                    quad = classify_quadruple(ctx, q1, q2, q3, q4)
                    if quad is not None:
                        out.append(quad)
    return out


def enumerate_Q_d(ctx: ComplexCtx, q: int | None, d: int) -> list[QQuadruple]:
    return [x for x in enumerate_Q(ctx, q) if sum(x.params) == d]


# --- specs ------------------------------------------------------------------------

FAMILIES = ("F3", "F2", "Psi", "E0", "E1", "Gamma", "J2", "Lambda")
_ARITY = {"F3": 3, "F2": 3, "Psi": 3, "E0": 3, "E1": 3, "Gamma": 3, "J2": 2, "Lambda": 1}
_NPARAMS = {"F3": 3, "F2": 2, "Psi": 2, "E0": 2, "E1": 2, "Gamma": 4, "J2": 2, "Lambda": 1}


@dataclass(frozen=True, order=True)
class CocycleSpec:
    family: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ParseError(f"unknown family {self.family!r}")
        if len(self.params) != _NPARAMS[self.family]:
            raise ParseError(f"{self.family} takes {_NPARAMS[self.family]} parameters")

    @property
    def arity(self) -> int:
        return _ARITY[self.family]

    def __str__(self) -> str:
        if self.family in ("F3", "F2"):
            a, b, *c = self.params
            return f"F({a},{b},{c[0] if c else 0})"
        return f"{self.family}({','.join(map(str, self.params))})"


_SPEC_RE = re.compile(r"^\s*(F|Psi|E0|E1|Gamma|Lambda|J2)\s*\(\s*([0-9,\s]*)\)\s*$")


def parse_spec(text: str) -> CocycleSpec:
    """Parse ``F(a,b,c) | F(a,b) | Psi(a,b) | E0(a,b) | E1(a,b) | Gamma(a,b,c,d) | Lambda(d) | J2(a,b)``."""
    m = _SPEC_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse cocycle spec {text!r}")
    name = m.group(1)
    try:
        params = tuple(int(x) for x in m.group(2).split(",")) if m.group(2).strip() else ()
    except ValueError as exc:
        raise ParseError(f"bad parameters in {text!r}") from exc
    if name == "F":
        if len(params) == 2 or (len(params) == 3 and params[2] == 0):
            return CocycleSpec("F2", params[:2])
        return CocycleSpec("F3", params)
    return CocycleSpec(name, params)


def realize(ctx: ComplexCtx, spec: CocycleSpec) -> Polynomial:
    """Expand a spec into its polynomial; structural violations raise AdmissibilityViolation."""
    fam, pr = spec.family, spec.params
    try:
        if fam == "F3":
            return make_F(ctx, *pr)
        if fam == "F2":
            return make_F(ctx, pr[0], pr[1], 0)
        if fam == "Psi":
            return make_Psi(ctx, *pr)
        if fam == "E0":
            return make_E0(ctx, *pr)
        if fam == "E1":
            return make_E1(ctx, *pr)
        if fam == "Gamma":
            quad = classify_quadruple(ctx, *pr)
            if quad is None:
                raise AdmissibilityViolation(f"{spec} is not an admissible quadruple")
            return make_Gamma(ctx, quad)
        if fam == "J2":
            return make_J2(ctx, *pr)
        if fam == "Lambda":
            return make_Lambda(ctx, *pr)
    except AdmissibilityViolation:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise AdmissibilityViolation(f"{spec}: {exc}") from exc
    raise AdmissibilityViolation(f"unknown family {fam}")


def _iter_I(ctx: ComplexCtx, q: int) -> Iterator[CocycleSpec]:
    p, one = ctx.p, ctx.omega_pow_is_one
    pw = powers_below(p, q)
    for q1 in pw:
        for q2 in pw:
            for q3 in pw:
                if q1 < q2 < q3 and one(q1 + q2 + q3):
                    yield CocycleSpec("F3", (q1, q2, q3))
    for q1 in pw:
        for q2 in pw:
            if q1 < q2 and one(q1 + q2):
                yield CocycleSpec("F2", (q1, q2))
    for a in range(1, q):
        for q1 in pw:
            if q1 > 1 and one(a + q1) and a % q1 and not is_power_of(a, p):
                yield CocycleSpec("Psi", (a, q1))
    for q1 in pw:
        for q2 in pw:
            if q1 < q2 and one(p * q1 + q2):
                yield CocycleSpec("E0", (p * q1, q2))
    for q1 in pw:
        for q2 in pw:
            if q1 <= q2 and one(q1 + p * q2):
                yield CocycleSpec("E1", (q1, p * q2))
    for quad in enumerate_Q(ctx, q):
        yield CocycleSpec("Gamma", quad.params)


def enumerate_I(ctx: ComplexCtx, q: int | None = None) -> list[CocycleSpec]:
    """The generating set I(q) of H^3, family by family, parameters lexicographic."""
    return list(_iter_I(ctx, ctx.q if q is None else q))


def enumerate_J2(ctx: ComplexCtx, q: int | None = None) -> list[CocycleSpec]:
    """U_1^{p^t} T_2^{p^s} with t < s, p^s < q and w^{p^t + p^s} = 1."""
    q = ctx.q if q is None else q
    pw = powers_below(ctx.p, q)
    return [
        CocycleSpec("J2", (a, b))
        for a in pw
        for b in pw
        if a < b and ctx.omega_pow_is_one(a + b)
    ]


def fermat_quotient_lift(ctx: ComplexCtx, s: int) -> Polynomial:
    """[p^{-1}((wU_1 + T_2)^p - (U_1 + T_2)^p + (1 - w^p) U_1^p)]^{p^s}.

    The division by p happens on the integer binomials, so the bracket is
    sum_{0<i<p} (binom(p,i)/p) (w^{p-i} - 1) U_1^{p-i} T_2^i.
    """
    f, p = ctx.field, ctx.p
    terms = {}
    for i in range(1, p):
        c = (_comb(p, i) // p) % p
        k = f.mul(f.from_int(c), f.sub(ctx.w_pow(p - i), 1))
        if k:
            terms[(p - i, i)] = k
    base = Polynomial._raw(f, 2, terms)
    ps = p**s
    # Frobenius: (sum c m)^{p^s} = sum c^{p^s} m^{p^s}
    return Polynomial._raw(
        f, 2, {(e[0] * ps, e[1] * ps): f.pow(c, ps) for e, c in base.terms.items() if f.pow(c, ps)}
    )


__all__ = [
    "CocycleSpec",
    "QQuadruple",
    "binom_mod_p",
    "chi",
    "chi_by_sum",
    "classify_quadruple",
    "enumerate_I",
    "enumerate_J2",
    "enumerate_Q",
    "enumerate_Q_d",
    "fermat_quotient_lift",
    "make_E0",
    "make_E1",
    "make_F",
    "make_G",
    "make_Gamma",
    "make_J2",
    "make_Lambda",
    "make_Psi",
    "mu_difference",
    "parse_spec",
    "realize",
]
