import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alexcoh.complex import basis_C
from alexcoh.errors import ArityMismatch, SpecMismatch
from alexcoh.gf import catalog_field, make_field, prime_field
from alexcoh.polyring import (
    Polynomial,
    binom_mod_p,
    divisible_by_omega_prefix,
    expand_linear_power,
    in_Cn_q,
    p_add,
    p_mul,
    p_scale,
    substitute,
    variables,
)

from fieldcases import ctx


def _poly(field, arity, items):
    return Polynomial(field, arity, dict(items))


def test_binom_mod_p_matches_integer_binomials():
    from math import comb

    for p in (2, 3, 5, 7):
        for n in range(40):
            for k in range(n + 1):
                assert binom_mod_p(n, k, p) == comb(n, k) % p
    assert binom_mod_p(3, 5, 3) == 0


def test_difference_of_squares():
    f = prime_field(3)
    U, T = variables(f, 2)
    assert p_mul(U + T, U - T) == U**2 - T**2


def test_additive_inverse_and_zero_dropping():
    f = catalog_field(9)
    a = _poly(f, 2, {(1, 0): f.gen, (1, 2): 2})
    assert (a + (-a)).is_zero()
    assert len(p_add(a, p_scale(a, -1)).terms) == 0


def test_characteristic_two_square():
    f = catalog_field(4)
    U, T = variables(f, 2)
    assert (U + T) ** 2 == U**2 + T**2


def test_arity_and_field_mismatch():
    f = catalog_field(4)
    with pytest.raises(ArityMismatch):
        variables(f, 2)[0] + variables(f, 3)[0]
    with pytest.raises(SpecMismatch):
        variables(f, 2)[0] + variables(catalog_field(8), 2)[0]


def test_expand_linear_power_examples():
    f3, f2 = prime_field(3), prime_field(2)
    assert expand_linear_power(1, 1, 3, f3).terms == {(3, 0): 1, (0, 3): 1}
    assert set(expand_linear_power(1, 1, 3, f2).terms) == {(3, 0), (2, 1), (1, 2), (0, 3)}
    assert expand_linear_power(1, 1, 4, f3).terms == {(4, 0): 1, (3, 1): 1, (1, 3): 1, (0, 4): 1}


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_expand_linear_power_pointwise(q):
    f = catalog_field(q) if q in (4, 8, 9) else prime_field(q)
    els = list(f.elements())
    for a in range(q):
        poly = expand_linear_power(1, 1, a, f)
        for x in els:
            for y in els:
                assert poly.evaluate([x, y]) == (x + y) ** a


def test_substitute_examples():
    c = ctx(2, (1, 1, 1), "g")
    f, w = c.field, c.omega.value
    U1T2 = _poly(f, 2, {(1, 1): 1})
    assert substitute(U1T2, [{0: w}, {1: 1}]) == U1T2.scale(w)
    lam = _poly(f, 1, {(3,): 1})
    got = substitute(lam, [{0: w, 1: 1}], arity=2)
    assert got == expand_linear_power(w, f.one, 3)
    assert substitute(U1T2, [{0: 1}, {1: 1}]) == U1T2
    with pytest.raises(ArityMismatch):
        substitute(U1T2, [{0: 1}])


def _random_poly(rng, f, arity, nterms=4, top=4):
    return Polynomial(
        f, arity, {tuple(rng.randrange(top) for _ in range(arity)): rng.randrange(1, f.q) for _ in range(nterms)}
    )


def test_substitute_is_ring_homomorphism():
    rng = random.Random(7)
    f = catalog_field(9)
    for _ in range(40):
        a, b = _random_poly(rng, f, 2), _random_poly(rng, f, 2)
        forms = [{k: rng.randrange(f.q) for k in range(3) if rng.random() < 0.7} for _ in range(2)]
        sub = lambda g: substitute(g, forms, arity=3)  # noqa: E731
        assert sub(a * b) == sub(a) * sub(b)
        assert sub(a + b) == sub(a) + sub(b)


def test_divisibility_and_truncation_predicates():
    f = catalog_field(4)
    assert divisible_by_omega_prefix(_poly(f, 3, {(1, 1, 2): 1}))
    assert not divisible_by_omega_prefix(_poly(f, 3, {(1, 0, 1): 1}))
    assert divisible_by_omega_prefix(Polynomial.zero(f, 3))
    assert in_Cn_q(_poly(f, 3, {(1, 3, 1): 1}), 4)
    assert not in_Cn_q(_poly(f, 3, {(4, 1, 1): 1}), 4)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_c3_basis_count(q):
    assert len(basis_C(q, 3)) == q * (q - 1) ** 2


def test_canonical_text_order():
    f = make_field(3, [1, 0, 1])
    poly = _poly(f, 3, {(1, 1, 6): f.gen + 1, (1, 4, 3): 1, (2, 1, 0): 2})
    assert poly.to_text() == "U1*U2^4*T3^3 + (g+1)*U1*U2*T3^6 + 2*U1^2*U2"


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(1, 8)), max_size=6),
       st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(1, 8)), max_size=6))
def test_ring_laws_hypothesis(ta, tb):
    f = catalog_field(9)
    a = Polynomial(f, 2, {(x, y): c for x, y, c in ta})
    b = Polynomial(f, 2, {(x, y): c for x, y, c in tb})
    assert a * b == b * a
    assert (a + b) * a == a * a + b * a
    assert (a - b) + b == a
    for x, y in itertools.product([f.zero, f.gen, f.one + f.gen], repeat=2):
        assert (a * b).evaluate([x, y]) == a.evaluate([x, y]) * b.evaluate([x, y])
