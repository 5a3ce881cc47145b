import random

import numpy as np
import pytest

from alexcoh.complex import basis_C, cochain_slice, cohomology_dim, delta
from alexcoh.errors import DegreeUnsupported, NotInComplex
from alexcoh.linalg import rank
from alexcoh.oracle import (
    FnCochain,
    chain_map_sign,
    cross_check,
    fn_delta,
    fn_delta_matrix,
    graded_delta_matrix,
    oracle_h_dim,
    phi,
    phi_is_iso,
    phi_matrix,
    quandle_from,
)
from alexcoh.polyring import Polynomial

from fieldcases import all_ctxs, ctx, ctx_id

CTXS_9 = all_ctxs(9)


@pytest.mark.parametrize("c", all_ctxs(16), ids=ctx_id)
def test_quandle_axioms(c):
    X = quandle_from(c)  # raises on any violation
    f = c.field
    w = c.omega.value
    for a in f.elements():
        for b in list(f.elements())[:4]:
            assert X.entry(a.code, b.code) == (w * a + (1 - w) * b).code


def test_quandle_examples():
    X = quandle_from(ctx(3, None, "2"))
    for a in range(3):
        for b in range(3):
            assert X.entry(a, b) == (-(a + b)) % 3
    X9 = quandle_from(ctx(3, (1, 0, 1), "g"))
    assert all(X9.entry(a, a) == a for a in range(9))
    X4 = quandle_from(ctx(2, (1, 1, 1), "g"))
    for b in range(4):
        assert sorted(X4.table[:, b]) == [0, 1, 2, 3]


def test_tuple_counts():
    X = quandle_from(ctx(3, None, "2"))
    assert len(X.tuples(3)) == 12 and len(X.tuples(4)) == 24
    for c in CTXS_9[:6]:
        X = quandle_from(c)
        for n in (1, 2, 3, 4):
            assert len(X.tuples(n)) == c.q * (c.q - 1) ** (n - 1)


def test_tuple_order_is_lexicographic_in_coefficients():
    c = ctx(3, (1, 0, 1), "g")
    X = quandle_from(c)
    keys = [tuple(c.field.coeffs_of(int(x)) for x in row) for row in X.tuples(2).codes]
    assert keys == sorted(keys)


def test_delta_matrix_shape_and_errors():
    X = quandle_from(ctx(2, (1, 1, 1), "g"))
    assert fn_delta_matrix(X, 3).shape == (4 * 27, 4 * 9)
    with pytest.raises(DegreeUnsupported):
        fn_delta_matrix(X, 4)
    with pytest.raises(DegreeUnsupported):
        oracle_h_dim(X, 0)


@pytest.mark.parametrize("c", CTXS_9, ids=ctx_id)
def test_fn_delta_squares_to_zero(c):
    X = quandle_from(c)
    for n in (1, 2):
        assert (fn_delta_matrix(X, n + 1) @ fn_delta_matrix(X, n)).is_zero()


def test_fn_delta_by_hand_q3():
    c = ctx(3, None, "2")
    X = quandle_from(c)
    one = FnCochain(1, c.field, np.ones(3, dtype=np.int64))
    assert fn_delta(X, one).is_zero()
    # indicator of 0: (delta f)(x1, x2) = f(x1) - f(x1 * x2)
    ind = FnCochain(1, c.field, np.array([1, 0, 0], dtype=np.int64))
    d = fn_delta(X, ind)
    for x1 in range(3):
        for x2 in range(3):
            if x1 != x2:
                expect = ((x1 == 0) - (X.entry(x1, x2) == 0)) % 3
                assert d.value(X, (x1, x2)) == expect
    assert d.value(X, (1, 1)) == 0


def test_oracle_dimension_examples():
    assert oracle_h_dim(quandle_from(ctx(2, (1, 1, 1), "g")), 3) == 3
    assert oracle_h_dim(quandle_from(ctx(5, None, "2")), 3) == 0
    with pytest.raises(ValueError):
        oracle_h_dim(quandle_from(ctx(5, None, "2")), 3, method="bogus")


@pytest.mark.parametrize("c", CTXS_9, ids=ctx_id)
def test_full_and_graded_oracles_agree_with_polynomial_side(c):
    X = quandle_from(c)
    for n in (1, 2, 3):
        full = oracle_h_dim(X, n, "full")
        assert full == oracle_h_dim(X, n, "graded")
        assert full == cohomology_dim(c, n)


@pytest.mark.parametrize("c", [x for x in all_ctxs(16) if x.q > 9][::3], ids=ctx_id)
def test_graded_oracle_matches_polynomial_side_large_q(c):
    X = quandle_from(c)
    for n in (2, 3):
        assert oracle_h_dim(X, n, "graded") == cohomology_dim(c, n)


def test_graded_blocks_square_to_zero():
    c = ctx(2, (1, 0, 1, 1), "g")
    X = quandle_from(c)
    for j in range(c.q - 1):
        assert (graded_delta_matrix(X, 2, j) @ graded_delta_matrix(X, 1, j)).is_zero()
        assert (graded_delta_matrix(X, 3, j) @ graded_delta_matrix(X, 2, j)).is_zero()


def test_graded_blocks_partition_the_full_rank():
    c = ctx(3, (1, 0, 1), "g")
    X = quandle_from(c)
    for n in (1, 2, 3):
        full = rank(fn_delta_matrix(X, n))
        assert full == sum(rank(graded_delta_matrix(X, n, j)) for j in range(c.q - 1))


def test_phi_examples():
    c = ctx(2, (1, 1, 1), "g")
    X = quandle_from(c)
    U1 = Polynomial._raw(c.field, 2, {(1, 0): 1})
    img = phi(c, U1, X)
    for (x1, x2), v in zip(X.tuples(2).codes, img.values):
        assert v == c.field.sub(int(x1), int(x2)) and v != 0
    const = phi(c, Polynomial._raw(c.field, 1, {(0,): 1}), X)
    assert (const.values == 1).all()
    with pytest.raises(NotInComplex):
        phi(c, Polynomial._raw(c.field, 2, {(0, 1): 1}), X)


def test_phi_matrix_examples():
    c3 = ctx(3, None, "2")
    M = phi_matrix(c3, 2)
    assert M.shape == (6, 6) and rank(M) == 6
    c4 = ctx(2, (1, 1, 1), "g")
    M = phi_matrix(c4, 3)
    assert M.shape == (36, 36) and rank(M) == 36


@pytest.mark.parametrize("c", CTXS_9, ids=ctx_id)
def test_phi_is_iso_and_chain_map(c):
    X = quandle_from(c)
    expected_sign = 1 if c.p == 2 else -1
    for n in (1, 2, 3):
        assert phi_is_iso(c, n, X)
        assert chain_map_sign(c, n, X) == expected_sign


def test_chain_map_matrix_identity_q4():
    c = ctx(2, (1, 1, 1), "g")
    X = quandle_from(c)
    for n in (1, 2, 3):
        P_n, P_next = phi_matrix(c, n, X), phi_matrix(c, n + 1, X)
        D_poly = cochain_slice(c, n, None).delta_matrix
        assert P_next @ D_poly == fn_delta_matrix(X, n) @ P_n


def test_phi_commutes_on_random_cochains_q4():
    c = ctx(2, (1, 1, 1), "g")
    X = quandle_from(c)
    rng = random.Random(2)
    basis = basis_C(c, 2)
    for _ in range(20):
        f = Polynomial(c.field, 2, {e: rng.randrange(1, 4) for e in rng.sample(basis, 4)})
        assert phi(c, delta(c, f), X) == fn_delta(X, phi(c, f, X))


@pytest.mark.parametrize("c", CTXS_9, ids=ctx_id)
def test_h2_cross_check(c):
    cc = cross_check(c, 2)
    assert cc.agree
    assert cc.oracle_dim == len(cc.members)


@pytest.mark.parametrize("c", CTXS_9, ids=ctx_id)
def test_generating_set_spans_h3(c):
    cc = cross_check(c, 3)
    assert cc.cocycles
    assert cc.rank_mod_coboundaries == cc.oracle_dim


def test_cross_check_methods_agree():
    for c in (ctx(3, (1, 0, 1), "g"), ctx(2, (1, 0, 1, 1), "g"), ctx(3, (1, 0, 1), "2")):
        a = cross_check(c, 3, method="full").as_dict()
        b = cross_check(c, 3, method="graded").as_dict()
        a.pop("method"), b.pop("method")
        assert a == b


def test_cross_check_rejects_other_degrees():
    with pytest.raises(DegreeUnsupported):
        cross_check(ctx(3, None, "2"), 1)
