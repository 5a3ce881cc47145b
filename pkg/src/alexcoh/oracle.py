"""Brute-force quandle cohomology of the Alexander quandle on F_q.

Cochains are F_q-valued functions on n-tuples with no two adjacent entries
equal, and the differential is evaluated literally from the quandle table.
Nothing here touches the polynomial complex except :func:`phi`, the
comparison map.

Two ways to get dimensions:

* ``full``: one matrix per degree on the whole tuple basis.
* ``graded``: the scalings x -> u x (u in F_q^*) are quandle automorphisms,
  so the complex splits into eigenspaces f(u x) = u^j f(x), j = 0..q-2.
  Each eigenspace has a basis indexed by tuples whose first nonzero entry
  is 1, which cuts every matrix by a factor q - 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .cocycles import CocycleSpec, enumerate_I, enumerate_J2, realize
from .complex import ComplexCtx, basis_C, delta
from .errors import AxiomViolation, DegreeUnsupported, NotInComplex
from .gf import GF
from .linalg import MatrixFq, coordinates_in_span, independent_mod, rank
from .polyring import Polynomial, divisible_by_omega_prefix

MAX_DEGREE = 3


@dataclass(frozen=True, eq=False)
class QuandleTable:
    """Multiplication table of a * b = w a + (1 - w) b, indexed by element codes."""

    field: GF
    omega: int
    table: np.ndarray

    @property
    def q(self) -> int:
        return self.field.q

    def entry(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def check_axioms(self) -> None:
        t, q = self.table, self.q
        idx = np.arange(q)
        if not np.array_equal(t[idx, idx], idx):
            raise AxiomViolation("a * a != a")
        cols = np.sort(t, axis=0)
        if not np.array_equal(cols, np.broadcast_to(idx[:, None], (q, q))):
            raise AxiomViolation("a -> a * b is not a bijection")
        a, b, c = np.meshgrid(idx, idx, idx, indexing="ij")
        if not np.array_equal(t[t[a, b], c], t[t[a, c], t[b, c]]):
            raise AxiomViolation("(a * b) * c != (a * c) * (b * c)")

    @cached_property
    def _tuples(self) -> dict:
        return {}

    def tuples(self, n: int) -> "TupleBasis":
        cache = self._tuples
        if n not in cache:
            cache[n] = TupleBasis.build(self.field, n)
        return cache[n]


def quandle_from(ctx: ComplexCtx) -> QuandleTable:
    f = ctx.field
    w = ctx.w
    one_minus_w = f.sub(1, w)
    mul = f.mul_table
    idx = np.arange(f.q)
    table = f.add_table[mul[w, idx][:, None], mul[one_minus_w, idx][None, :]]
    X = QuandleTable(f, w, np.ascontiguousarray(table))
    X.check_axioms()
    return X


# --- tuple bases -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TupleBasis:
    """Non-degenerate n-tuples (codes) in lexicographic element order, with a lookup."""

    n: int
    q: int
    codes: np.ndarray  # (N, n) element codes
    lookup: np.ndarray  # flat index by ordinal key, -1 when degenerate
    ordinal: np.ndarray  # code -> position in the element order

    @classmethod
    def build(cls, field: GF, n: int) -> "TupleBasis":
        q = field.q
        order = np.array(field.ordered_codes, dtype=np.int64)
        ordinal = np.empty(q, dtype=np.int64)
        ordinal[order] = np.arange(q)
        ords = np.indices((q,) * n).reshape(n, -1).T
        keep = np.all(ords[:, 1:] != ords[:, :-1], axis=1) if n > 1 else np.ones(len(ords), bool)
        ords = ords[keep]
        lookup = np.full(q**n, -1, dtype=np.int64)
        lookup[_keys(ords, q)] = np.arange(len(ords))
        return cls(n, q, np.ascontiguousarray(order[ords]), lookup, ordinal)

    def __len__(self) -> int:
        return len(self.codes)

    def index_of(self, codes: np.ndarray) -> np.ndarray:
        """Row positions of code tuples (-1 for degenerate ones)."""
        return self.lookup[_keys(self.ordinal[codes], self.q)]

    @cached_property
    def normalized(self) -> np.ndarray:
        """Positions of tuples whose first nonzero entry is the unit."""
        c = self.codes
        first = c[np.arange(len(c)), np.argmax(c != 0, axis=1)]
        return np.flatnonzero(first == 1)


def _keys(ords: np.ndarray, q: int) -> np.ndarray:
    key = np.zeros(len(ords), dtype=np.int64)
    for k in range(ords.shape[1]):
        key = key * q + ords[:, k]
    return key


def _check_degree(n: int) -> None:
    if not 1 <= n <= MAX_DEGREE:
        raise DegreeUnsupported(f"degree {n} not supported (1..{MAX_DEGREE})")


def _delta_terms(X: QuandleTable, rows: np.ndarray) -> Iterable[tuple[int, np.ndarray]]:
    """(sign code, argument tuples) for each of the 2(n+1) terms of delta at ``rows``."""
    f = X.field
    t = X.table
    m = rows.shape[1]  # n + 1
    for i in range(1, m):  # i = 0 contributes f(x_2..) - f(x_2..) = 0
        sign = 1 if i % 2 == 0 else f.neg(1)
        acting = np.concatenate([t[rows[:, :i], rows[:, i : i + 1]], rows[:, i + 1 :]], axis=1)
        face = np.delete(rows, i, axis=1)
        yield sign, acting
        yield f.neg(sign), face


def fn_delta_matrix(X: QuandleTable, n: int) -> MatrixFq:
    """delta: C^n(X, F_q) -> C^{n+1}(X, F_q) in the lexicographic tuple bases."""
    _check_degree(n)
    src, tgt = X.tuples(n), X.tuples(n + 1)
    rr, cc, vv = [], [], []
    rows = tgt.codes
    for sign, args in _delta_terms(X, rows):
        col = src.index_of(args)
        ok = col >= 0
        rr.append(np.flatnonzero(ok))
        cc.append(col[ok])
        vv.append(np.full(int(ok.sum()), sign, dtype=np.int64))
    return MatrixFq.from_coo(X.field, len(tgt), len(src), np.concatenate(rr), np.concatenate(cc), np.concatenate(vv))


# --- graded pieces ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GradedBasis:
    """Basis of the eigenspace j of C^n: one function per normalized tuple."""

    n: int
    j: int
    tuples: TupleBasis
    reps: np.ndarray  # positions in ``tuples`` of the basis tuples
    with_zero: bool  # the n = 1, j = 0 space also contains the indicator of 0

    def __len__(self) -> int:
        return len(self.reps) + int(self.with_zero)


@lru_cache(maxsize=None)
def _graded_basis(X: QuandleTable, n: int, j: int) -> GradedBasis:
    tb = X.tuples(n)
    return GradedBasis(n, j, tb, tb.normalized, n == 1 and j == 0)


def _rep_lookup(gb: GradedBasis) -> np.ndarray:
    out = np.full(len(gb.tuples), -1, dtype=np.int64)
    out[gb.reps] = np.arange(len(gb.reps))
    return out


def graded_delta_matrix(X: QuandleTable, n: int, j: int) -> MatrixFq:
    """delta restricted to the eigenspace f(u x) = u^j f(x)."""
    _check_degree(n)
    f = X.field
    src, tgt = _graded_basis(X, n, j), _graded_basis(X, n + 1, j)
    rep_of = _rep_lookup(src)
    powj = np.array([f.pow(v, j) if v else 0 for v in range(f.q)], dtype=np.int64)
    rows = tgt.tuples.codes[tgt.reps]
    rr, cc, vv = [], [], []
    zero_col = len(src.reps)
    for sign, args in _delta_terms(X, rows):
        lead = args[np.arange(len(args)), np.argmax(args != 0, axis=1)]
        nonzero = lead != 0
        if src.with_zero:
            z = np.flatnonzero(~nonzero)
            rr.append(z)
            cc.append(np.full(len(z), zero_col, dtype=np.int64))
            vv.append(np.full(len(z), sign, dtype=np.int64))
        idx = np.flatnonzero(nonzero)
        scaled = f.mul_table[f.inv_table[lead[idx]][:, None], args[idx]]
        pos = src.tuples.index_of(scaled)
        ok = pos >= 0
        col = rep_of[pos[ok]]
        rr.append(idx[ok])
        cc.append(col)
        vv.append(f.mul_table[sign, powj[lead[idx[ok]]]])
    return MatrixFq.from_coo(f, len(tgt), len(src), np.concatenate(rr), np.concatenate(cc), np.concatenate(vv))


def graded_coordinates(X: QuandleTable, fc: "FnCochain", j: int) -> np.ndarray:
    """Coordinates of an eigenvector of weight j: its values on the normalized tuples."""
    gb = _graded_basis(X, fc.n, j)
    v = fc.values[gb.reps]
    if gb.with_zero:
        zero_pos = fc_index(X, fc.n, np.zeros((1, fc.n), dtype=np.int64))[0]
        v = np.append(v, fc.values[zero_pos])
    return v


def fc_index(X: QuandleTable, n: int, codes: np.ndarray) -> np.ndarray:
    return X.tuples(n).index_of(codes)


# --- dimensions ------------------------------------------------------------


def _full_dim(X: QuandleTable, n: int) -> int:
    dim = len(X.tuples(n))
    r_out = rank(fn_delta_matrix(X, n))
    r_in = rank(fn_delta_matrix(X, n - 1)) if n > 1 else 0
    return dim - r_out - r_in


def _graded_dim(X: QuandleTable, n: int) -> int:
    total = 0
    for j in range(X.q - 1):
        dim = len(_graded_basis(X, n, j))
        r_out = rank(graded_delta_matrix(X, n, j))
        r_in = rank(graded_delta_matrix(X, n - 1, j)) if n > 1 else 0
        total += dim - r_out - r_in
    return total


FULL_LIMIT = 9


def oracle_h_dim(X: QuandleTable, n: int, method: str = "auto") -> int:
    """dim H^n(X, F_q) computed from the function complex.

    ``method`` is ``full``, ``graded`` or ``auto`` (full up to q = 9).
    """
    _check_degree(n)
    if method == "auto":
        method = "full" if X.q <= FULL_LIMIT else "graded"
    if method == "full":
        return _full_dim(X, n)
    if method == "graded":
        return _graded_dim(X, n)
    raise ValueError(f"unknown method {method!r}")


# --- the comparison map --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FnCochain:
    """A function on non-degenerate n-tuples, stored in tuple-basis order."""

    n: int
    field: GF
    values: np.ndarray

    def value(self, X: QuandleTable, point: Sequence[int]) -> int:
        """Value (code) at a tuple of element codes; 0 on degenerate tuples."""
        pos = X.tuples(self.n).index_of(np.asarray([point], dtype=np.int64))[0]
        return 0 if pos < 0 else int(self.values[pos])

    def is_zero(self) -> bool:
        return not self.values.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FnCochain)
            and self.n == other.n
            and self.field == other.field
            and np.array_equal(self.values, other.values)
        )


def fn_delta(X: QuandleTable, fc: FnCochain) -> FnCochain:
    return FnCochain(fc.n + 1, fc.field, fn_delta_matrix(X, fc.n) @ fc.values)


def _phi_args(field: GF, codes: np.ndarray) -> np.ndarray:
    """(x_1 - x_2, ..., x_{n-1} - x_n, x_n) for every row."""
    args = codes.copy()
    if codes.shape[1] > 1:
        args[:, :-1] = field.sub_table[codes[:, :-1], codes[:, 1:]]
    return args


def _power_table(field: GF, top: int) -> np.ndarray:
    out = np.zeros((field.q, top + 1), dtype=np.int64)
    out[:, 0] = 1
    for e in range(1, top + 1):
        out[:, e] = field.mul_table[out[:, e - 1], np.arange(field.q)]
    return out


def _monomial_values(field: GF, args: np.ndarray, exps: Sequence[int], pw: np.ndarray) -> np.ndarray:
    val = np.ones(len(args), dtype=np.int64)
    for k, e in enumerate(exps):
        if e:
            val = field.mul_table[val, pw[args[:, k], e]]
    return val


def phi(ctx: ComplexCtx, f: Polynomial, X: QuandleTable | None = None) -> FnCochain:
    """The function (x_1, ..., x_n) -> f(x_1 - x_2, ..., x_{n-1} - x_n, x_n)."""
    if not divisible_by_omega_prefix(f):
        raise NotInComplex("polynomial is not divisible by U_1 ... U_{n-1}")
    X = X or quandle_from(ctx)
    field = ctx.field
    args = _phi_args(field, X.tuples(f.arity).codes)
    pw = _power_table(field, max(f.max_exponent(), 1))
    out = np.zeros(len(args), dtype=np.int64)
    for e, c in f.terms.items():
        out = field.add_table[out, field.mul_table[c, _monomial_values(field, args, e, pw)]]
    return FnCochain(f.arity, field, out)


def phi_matrix(ctx: ComplexCtx, n: int, X: QuandleTable | None = None) -> MatrixFq:
    """Columns: phi of each monomial of C^n(q) in canonical order; rows: tuple basis."""
    if not 1 <= n <= MAX_DEGREE + 1:
        raise DegreeUnsupported(f"degree {n} not supported")
    X = X or quandle_from(ctx)
    field = ctx.field
    args = _phi_args(field, X.tuples(n).codes)
    pw = _power_table(field, ctx.q - 1)
    cols = [_monomial_values(field, args, e, pw) for e in basis_C(ctx, n)]
    return MatrixFq.from_columns(field, len(args), cols)


def phi_is_iso(ctx: ComplexCtx, n: int, X: QuandleTable | None = None) -> bool:
    M = phi_matrix(ctx, n, X)
    return M.rows == M.cols and rank(M) == M.rows


def chain_map_sign(ctx: ComplexCtx, n: int, X: QuandleTable | None = None) -> int | None:
    """The sign s with phi(delta f) = s * delta(phi f) for every monomial f of C^n(q).

    Returns None if neither sign works.
    """
    _check_degree(n)
    X = X or quandle_from(ctx)
    D = fn_delta_matrix(X, n)
    P = phi_matrix(ctx, n, X)
    rhs = D @ P
    neg = ctx.field.neg_table
    plus = minus = True
    for k, e in enumerate(basis_C(ctx, n)):
        lhs = phi(ctx, delta(ctx, Polynomial._raw(ctx.field, n, {e: 1})), X).values
        plus &= np.array_equal(lhs, rhs.data[:, k])
        minus &= np.array_equal(lhs, neg[rhs.data[:, k]])
        if not (plus or minus):
            return None
    return 1 if plus else -1


# --- cross-checks ---------------------------------------------------------------


@dataclass
class CrossCheck:
    """Comparison of an explicit cocycle list against the function complex."""

    degree: int
    oracle_dim: int
    members: list[CocycleSpec]
    cocycles: bool
    independent: bool
    rank_mod_coboundaries: int
    coboundary_members: list[CocycleSpec]
    method: str

    @property
    def agree(self) -> bool:
        return self.cocycles and self.independent and len(self.members) == self.oracle_dim

    def as_dict(self) -> dict:
        return {
            "dim": self.oracle_dim,
            "method": self.method,
            "cocycles": self.cocycles,
            "independent": self.independent,
            "rank_mod_coboundaries": self.rank_mod_coboundaries,
            "coboundary_members": [str(s) for s in self.coboundary_members],
        }


def _weight(f: Polynomial, q: int) -> int:
    degs = {sum(e) % (q - 1) for e in f.terms}
    if len(degs) != 1:
        raise ValueError("cochain is not homogeneous modulo q - 1")
    return degs.pop()


def cross_check(ctx: ComplexCtx, degree: int, members: list[CocycleSpec] | None = None, method: str = "auto") -> CrossCheck:
    """Check ``members`` (default: I(q) for degree 3, J2 for degree 2) against brute force.

    Independence is decided modulo the function-space coboundaries, per
    scaling weight when ``method`` resolves to ``graded``.
    """
    if degree not in (2, 3):
        raise DegreeUnsupported("cross checks exist for degrees 2 and 3")
    if members is None:
        members = enumerate_I(ctx) if degree == 3 else enumerate_J2(ctx)
    X = quandle_from(ctx)
    if method == "auto":
        method = "full" if ctx.q <= FULL_LIMIT else "graded"
    dim = oracle_h_dim(X, degree, method)
    polys = [realize(ctx, s) for s in members]
    cocycles = all(delta(ctx, g).is_zero() for g in polys)
    images = [phi(ctx, g, X) for g in polys]

    groups: dict[int, list[int]] = {}
    if method == "full":
        groups[0] = list(range(len(members)))
    else:
        for k, g in enumerate(polys):
            groups.setdefault(_weight(g, ctx.q), []).append(k)

    independent = True
    total_rank = 0
    trivial: list[CocycleSpec] = []
    for j, ks in groups.items():
        if method == "full":
            B = fn_delta_matrix(X, degree - 1)
            vecs = [images[k].values for k in ks]
        else:
            B = graded_delta_matrix(X, degree - 1, j)
            vecs = [graded_coordinates(X, images[k], j) for k in ks]
        rb = rank(B)
        total_rank += rank(B.hstack(MatrixFq.from_columns(ctx.field, B.rows, vecs))) - rb
        independent &= independent_mod(B, vecs)
        trivial += [members[k] for k, v in zip(ks, vecs) if coordinates_in_span(B, v)]
    trivial.sort(key=members.index)
    return CrossCheck(degree, dim, list(members), cocycles, independent, total_rank, trivial, method)


__all__ = [
    "CrossCheck",
    "FnCochain",
    "QuandleTable",
    "chain_map_sign",
    "cross_check",
    "fn_delta",
    "fn_delta_matrix",
    "graded_coordinates",
    "graded_delta_matrix",
    "oracle_h_dim",
    "phi",
    "phi_is_iso",
    "phi_matrix",
    "quandle_from",
]
