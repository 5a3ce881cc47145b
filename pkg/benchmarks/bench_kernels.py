"""Compare the numba and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends run in the same process so the timings are directly
comparable. Results are checked for equality before timing.
"""
import argparse
import time

import numpy as np

from alexcoh import _kernels
from alexcoh.complex import ComplexCtx
from alexcoh.gf import catalog_field, prime_field
from alexcoh.oracle import fn_delta_matrix, graded_delta_matrix, quandle_from


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def _tables(field):
    return field.add_table, field.mul_table, field.neg_table, field.inv_table


def cases():
    f16 = catalog_field(16)
    X16 = quandle_from(ComplexCtx.create(f16, "g^2+g"))
    yield "graded delta^3 q=16 j=3", f16, graded_delta_matrix(X16, 3, 3).data
    f9 = catalog_field(9)
    X9 = quandle_from(ComplexCtx.create(f9, "g"))
    yield "full delta^3 q=9", f9, fn_delta_matrix(X9, 3).data
    rng = np.random.default_rng(0)
    for field, n in ((prime_field(13), 400), (catalog_field(27), 300)):
        yield f"random {n}x{n} q={field.q}", field, rng.integers(0, field.q, size=(n, n)).astype(np.int64)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    _kernels.warmup()

    print(f"{'case':32} {'shape':>12} {'kernel':>9} {'numpy s':>9} {'numba s':>9} {'speedup':>8}")
    for name, field, a in cases():
        t = _tables(field)
        p1 = _kernels.eliminate_numpy(a.copy(), *t, False)
        p2 = _kernels.eliminate_jit(a.copy(), *t, False)
        assert np.array_equal(p1, p2)
        slow = _best(lambda: _kernels.eliminate_numpy(a.copy(), *t, False), args.repeat)
        fast = _best(lambda: _kernels.eliminate_jit(a.copy(), *t, False), args.repeat)
        shape = f"{a.shape[0]}x{a.shape[1]}"
        print(f"{name:32} {shape:>12} {'rank':>9} {slow:9.4f} {fast:9.4f} {slow / fast:7.1f}x")

        b = np.random.default_rng(1).integers(0, field.q, size=(a.shape[1], 64)).astype(np.int64)
        assert np.array_equal(
            _kernels.matmul_numpy(a, b, field.add_table, field.mul_table),
            _kernels.matmul_jit(a, b, field.add_table, field.mul_table),
        )
        slow = _best(lambda: _kernels.matmul_numpy(a, b, field.add_table, field.mul_table), args.repeat)
        fast = _best(lambda: _kernels.matmul_jit(a, b, field.add_table, field.mul_table), args.repeat)
        print(f"{'':32} {f'x{b.shape[1]} cols':>12} {'matmul':>9} {slow:9.4f} {fast:9.4f} {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
