"""Hot loops over GF(q) matrices stored as integer codes.

Every kernel exists twice: a numba ``@njit`` version and a vectorised numpy
version.  Set ``ALEXCOH_DISABLE_NUMBA=1`` (or run without numba installed) to
force the numpy path.  Both paths use the same pivot rule, so they produce
bit-identical echelon forms.

Field arithmetic is table driven: ``add``, ``mul``, ``neg``, ``inv`` are the
code tables of :class:`alexcoh.gf.GF`.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

USE_NUMBA = njit is not None and os.environ.get("ALEXCOH_DISABLE_NUMBA", "0").lower() in ("", "0", "false", "no")

if njit is not None:
    _jit = njit(cache=True, nogil=True)
else:  # pragma: no cover

    def _jit(fn):
        return fn


# --- row reduction --------------------------------------------------------


def eliminate_numpy(a, add, mul, neg, inv, full):
    """Row-reduce ``a`` in place; return the pivot columns.

    Pivot rule: columns left to right, first row (top down) with a nonzero
    entry.  ``full`` also clears entries above each pivot (reduced echelon form).
    """
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r, c:] = mul[inv[a[r, c]], a[r, c:]]
        col = a[:, c]
        targets = np.flatnonzero(col)
        targets = targets[targets != r] if full else targets[targets > r]
        if targets.size:
            neg_pivot_row = neg[a[r, c:]]
            factors = col[targets]
            a[targets, c:] = add[a[targets, c:], mul[factors[:, None], neg_pivot_row[None, :]]]
        pivots.append(c)
        r += 1
    return np.array(pivots, dtype=np.int64)


@_jit
def _eliminate_numba(a, add, mul, neg, inv, full, pivots):
    rows, cols = a.shape
    support = np.empty(cols, dtype=np.int64)
    r = 0
    npiv = 0
    for c in range(cols):
        if r == rows:
            break
        k = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(c, cols):
                t = a[r, j]
                a[r, j] = a[k, j]
                a[k, j] = t
        s = inv[a[r, c]]
        nsup = 0
        for j in range(c, cols):
            if a[r, j] != 0:
                a[r, j] = mul[s, a[r, j]]
                support[nsup] = j
                nsup += 1
        start = 0 if full else r + 1
        for i in range(start, rows):
            if i == r:
                continue
            f = a[i, c]
            if f == 0:
                continue
            nf = neg[f]
            for t in range(nsup):
                j = support[t]
                a[i, j] = add[a[i, j], mul[nf, a[r, j]]]
        pivots[npiv] = c
        npiv += 1
        r += 1
    return npiv


def eliminate_jit(a, add, mul, neg, inv, full):
    pivots = np.empty(min(a.shape), dtype=np.int64)
    n = _eliminate_numba(a, add, mul, neg, inv, full, pivots)
    return pivots[:n].copy()


# --- matrix product -------------------------------------------------------


def matmul_numpy(a, b, add, mul):
    n, k = a.shape
    out = np.zeros((n, b.shape[1]), dtype=np.int64)
    for t in range(k):
        col = a[:, t]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        row = b[t]
        out[nz] = add[out[nz], mul[col[nz][:, None], row[None, :]]]
    return out


@_jit
def _matmul_numba(a, b, add, mul, out):
    n, k = a.shape
    m = b.shape[1]
    for i in range(n):
        for t in range(k):
            x = a[i, t]
            if x == 0:
                continue
            for j in range(m):
                y = b[t, j]
                if y != 0:
                    out[i, j] = add[out[i, j], mul[x, y]]


def matmul_jit(a, b, add, mul):
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    _matmul_numba(a, b, add, mul, out)
    return out


# --- sparse accumulation --------------------------------------------------


def scatter_add_numpy(a, rows, cols, vals, add):
    """a[rows[i], cols[i]] += vals[i] over GF(q); duplicates accumulate."""
    # Process in rounds so each round touches each (row, col) at most once.
    key = rows * a.shape[1] + cols
    order = np.argsort(key, kind="stable")
    key, rows, cols, vals = key[order], rows[order], cols[order], vals[order]
    first = np.ones(key.size, dtype=bool)
    first[1:] = key[1:] != key[:-1]
    group_start = np.flatnonzero(first)
    rank_in_group = np.arange(key.size) - np.repeat(group_start, np.diff(np.append(group_start, key.size)))
    for level in range(int(rank_in_group.max(initial=-1)) + 1):
        sel = rank_in_group == level
        r, c = rows[sel], cols[sel]
        a[r, c] = add[a[r, c], vals[sel]]


@_jit
def _scatter_add_numba(a, rows, cols, vals, add):
    for i in range(rows.shape[0]):
        r = rows[i]
        c = cols[i]
        a[r, c] = add[a[r, c], vals[i]]


def scatter_add_jit(a, rows, cols, vals, add):
    _scatter_add_numba(a, rows, cols, vals, add)


if USE_NUMBA:
    eliminate = eliminate_jit
    matmul = matmul_jit
    scatter_add = scatter_add_jit
else:
    eliminate = eliminate_numpy
    matmul = matmul_numpy
    scatter_add = scatter_add_numpy


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def warmup() -> None:
    """Trigger JIT compilation so that later timings measure only the work."""
    add = np.array([[0, 1], [1, 0]], dtype=np.int64)
    mul = np.array([[0, 0], [0, 1]], dtype=np.int64)
    neg = np.array([0, 1], dtype=np.int64)
    inv = np.array([0, 1], dtype=np.int64)
    a = np.array([[1, 1], [0, 1]], dtype=np.int64)
    eliminate(a.copy(), add, mul, neg, inv, True)
    eliminate(a.copy(), add, mul, neg, inv, False)
    matmul(a, a, add, mul)
    scatter_add(np.zeros((2, 2), dtype=np.int64), np.array([0, 0]), np.array([1, 1]), np.array([1, 1]), add)
