"""Exact linear algebra over F_q on matrices of element codes."""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import InconsistentSpan, SpecMismatch
from .gf import GF, FieldElement


def _code(field: GF, v) -> int:
    if isinstance(v, FieldElement):
        if v.field != field:
            raise SpecMismatch("entry from another field")
        return v.code
    return int(v)


class MatrixFq:
    """Dense matrix over a finite field; entries are element codes (int64)."""

    __slots__ = ("field", "data")

    def __init__(self, field: GF, data) -> None:
        arr = np.array(data, dtype=np.int64, copy=True)
        if arr.size == 0 and arr.ndim < 2:
            arr = np.zeros((0, 0), dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError("entry code out of range")
        self.field = field
        self.data = arr

    @classmethod
    def _wrap(cls, field: GF, arr: np.ndarray) -> "MatrixFq":
        m = cls.__new__(cls)
        m.field = field
        m.data = arr
        return m

    @classmethod
    def zeros(cls, field: GF, rows: int, cols: int) -> "MatrixFq":
        return cls._wrap(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: GF, n: int) -> "MatrixFq":
        return cls._wrap(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_triples(cls, field: GF, rows: int, cols: int, triples: Iterable[tuple[int, int, object]]) -> "MatrixFq":
        """Sparse (row, col, value) input; repeated positions are summed."""
        trip = list(triples)
        m = cls.zeros(field, rows, cols)
        if trip:
            r = np.array([t[0] for t in trip], dtype=np.int64)
            c = np.array([t[1] for t in trip], dtype=np.int64)
            v = np.array([_code(field, t[2]) for t in trip], dtype=np.int64)
            if r.min() < 0 or r.max() >= rows or c.min() < 0 or c.max() >= cols:
                raise IndexError("triple index out of range")
            _kernels.scatter_add(m.data, r, c, v, field.add_table)
        return m

    @classmethod
    def from_coo(cls, field: GF, rows: int, cols: int, r, c, v) -> "MatrixFq":
        """Like :meth:`from_triples` but takes three parallel integer arrays."""
        r = np.asarray(r, dtype=np.int64)
        c = np.asarray(c, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        m = cls.zeros(field, rows, cols)
        if r.size:
            if r.min() < 0 or r.max() >= rows or c.min() < 0 or c.max() >= cols:
                raise IndexError("triple index out of range")
            _kernels.scatter_add(m.data, r, c, v, field.add_table)
        return m

    @classmethod
    def from_columns(cls, field: GF, nrows: int, columns: Sequence) -> "MatrixFq":
        if not columns:
            return cls.zeros(field, nrows, 0)
        return cls._wrap(field, np.stack([np.asarray(c, dtype=np.int64) for c in columns], axis=1))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def T(self) -> "MatrixFq":
        return MatrixFq._wrap(self.field, np.ascontiguousarray(self.data.T))

    def entry(self, i: int, j: int) -> FieldElement:
        return self.field.element(int(self.data[i, j]))

    def is_zero(self) -> bool:
        return not self.data.any()

    def hstack(self, other: "MatrixFq") -> "MatrixFq":
        return MatrixFq._wrap(self.field, np.hstack([self.data, other.data]))

    def __matmul__(self, other):
        if isinstance(other, MatrixFq):
            if other.field != self.field:
                raise SpecMismatch("matrices over different fields")
            return MatrixFq._wrap(self.field, matmul_codes(self.field, self.data, other.data))
        v = np.asarray(other, dtype=np.int64)
        return matmul_codes(self.field, self.data, v.reshape(-1, 1))[:, 0]

    def __eq__(self, other) -> bool:
        return isinstance(other, MatrixFq) and other.field == self.field and np.array_equal(self.data, other.data)

    def __repr__(self) -> str:
        return f"MatrixFq({self.rows}x{self.cols} over GF({self.field.q}))"

    def to_list(self) -> list[list[int]]:
        """Row-major integer codes."""
        return self.data.tolist()


def matmul_codes(field: GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if field.m == 1:
        # prime field: ordinary integer arithmetic is exact here
        return (a @ b) % field.p
    return _kernels.matmul(np.ascontiguousarray(a), np.ascontiguousarray(b), field.add_table, field.mul_table)


def _as_array(M) -> tuple[GF, np.ndarray]:
    return M.field, M.data


def echelon(M: MatrixFq, full: bool = True) -> tuple[MatrixFq, np.ndarray]:
    """Return (reduced) row echelon form and pivot columns."""
    f, a = _as_array(M)
    a = np.array(a, dtype=np.int64, copy=True, order="C")
    piv = _kernels.eliminate(a, f.add_table, f.mul_table, f.neg_table, f.inv_table, full)
    return MatrixFq._wrap(f, a), piv


def rank(M: MatrixFq) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    # eliminate along the short side
    N = M.T if M.rows < M.cols else M
    _, piv = echelon(N, full=False)
    return int(piv.size)


def kernel_basis(M: MatrixFq) -> list[np.ndarray]:
    """Basis of {v : Mv = 0} as code vectors; each one is checked exactly."""
    f = M.field
    ncols = M.cols
    if M.rows == 0:
        return [np.eye(ncols, dtype=np.int64)[i] for i in range(ncols)]
    R, piv = echelon(M, full=True)
    pivset = set(piv.tolist())
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = np.zeros(ncols, dtype=np.int64)
        v[free] = 1
        for i, pc in enumerate(piv):
            v[pc] = f.neg_list[int(R.data[i, free])]
        basis.append(v)
    if basis:
        K = MatrixFq.from_columns(f, ncols, basis)
        assert (M @ K).is_zero(), "kernel vector fails Mv = 0"
    assert len(basis) == ncols - piv.size
    return basis


def dim_quotient(Z_vectors: Sequence, B: MatrixFq) -> int:
    """dim span(Z) - rank(B); raises if some column of B is outside span(Z)."""
    f = B.field
    n = B.rows
    Z = MatrixFq.from_columns(f, n, list(Z_vectors))
    rz = rank(Z)
    if B.cols and rank(Z.hstack(B)) != rz:
        raise InconsistentSpan("coboundary outside the cocycle span")
    return rz - rank(B)


def independent_mod(B: MatrixFq, vectors: Sequence) -> bool:
    """True iff ``vectors`` are linearly independent modulo the column span of B."""
    vecs = list(vectors)
    if not vecs:
        return True
    V = MatrixFq.from_columns(B.field, B.rows, vecs)
    return rank(B.hstack(V)) == rank(B) + len(vecs)


def coordinates_in_span(M: MatrixFq, v) -> bool:
    """Whether v lies in the column span of M."""
    V = MatrixFq.from_columns(M.field, M.rows, [v])
    return rank(M.hstack(V)) == rank(M)
