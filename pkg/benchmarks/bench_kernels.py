"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat R]

Each kernel runs once first so numba compilation is excluded. Prints one
line per kernel with the best-of-R wall time of each variant.
"""
import argparse
import time

import numpy as np

from depflow import kernels


def best_time(fn, repeat):
    fn()
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def cases(rng):
    B = rng.standard_normal((200, 200))
    spd = B @ B.T + 200 * np.eye(200)
    sym = (B + B.T)[:80, :80].copy()
    U = rng.standard_normal((256, 2))
    A = rng.standard_normal((256, 256))
    A = A + A.T
    uniforms = rng.random(20_000)
    return [
        ("cholesky 200x200", lambda f: f(spd), kernels.cholesky_numba, kernels.cholesky_numpy),
        ("jacobi eigh 80x80", lambda f: f(sym, 1e-14, 50), kernels.jacobi_eigh_numba, kernels.jacobi_eigh_numpy),
        ("trace estimate b=256", lambda f: f(U, A, 10_000.0, 256.0), kernels.trace_estimate_numba, kernels.trace_estimate_numpy),
        ("pareto block sizes n=10k", lambda f: f(uniforms, 0.5, 1000, 10_000), kernels.pareto_block_sizes_numba, kernels.pareto_block_sizes_numpy),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    print(f"{'kernel':28s} {'numba (ms)':>12s} {'numpy (ms)':>12s} {'speedup':>8s}")
    for name, call, fast, slow in cases(np.random.default_rng(0)):
        a = best_time(lambda: call(fast), args.repeat)
        b = best_time(lambda: call(slow), args.repeat)
        print(f"{name:28s} {a * 1e3:12.3f} {b * 1e3:12.3f} {b / a:8.1f}x")


if __name__ == "__main__":
    main()
