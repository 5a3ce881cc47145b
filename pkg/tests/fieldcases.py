"""Shared field/omega constructors for the tests."""
from __future__ import annotations

from alexcoh.complex import ComplexCtx
from alexcoh.gf import CATALOG, catalog_field, catalog_orders, make_field, prime_field


def ctx(p: int, modulus=None, omega="g") -> ComplexCtx:
    field = prime_field(p) if modulus is None else make_field(p, modulus)
    return ComplexCtx.create(field, omega)


def field_of(q: int):
    return catalog_field(q) if q in CATALOG else prime_field(q)


def all_ctxs(max_q: int) -> list[ComplexCtx]:
    """Every catalog field up to max_q with every admissible omega."""
    out = []
    for q in catalog_orders(max_q):
        f = field_of(q)
        for code in f.ordered_codes:
            if code > 1:
                out.append(ComplexCtx.create(f, f.element(code)))
    return out


def ctx_id(c: ComplexCtx) -> str:
    return f"q{c.q}-w{c.omega}"


Q4 = ((2, (1, 1, 1)), "g")
Q8 = ((2, (1, 0, 1, 1)), "g")
Q9 = ((3, (1, 0, 1)), "g")
Q9_ORDER8 = ((3, (-1, 1, 1)), "g")
