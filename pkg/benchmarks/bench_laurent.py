"""Benchmark the compiled Laurent-polynomial kernels against pure Python.

Runs the dominant workloads (polynomial multiplication and fused
multiply-accumulate, as used by the h-constant dynamic program) on both
kernel implementations and reports timings.

Usage: python benchmarks/bench_laurent.py [--size N] [--repeat R]
"""

import argparse
import random
import time

from asymhecke import _kernels_py

try:
    from asymhecke import _kernels
except ImportError:
    _kernels = None


def random_poly(rng, width):
    # canonical form: coefficients are nonzero
    return {
        rng.randint(-12, 12): rng.choice((-1, 1)) * rng.randint(1, 99)
        for _ in range(width)
    }


def bench(kernels, polys, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        acc = {}
        for a, b in zip(polys, polys[1:]):
            kernels.map_mul(a, b)
            kernels.map_iadd_scaled(acc, a, 3, -1)
            kernels.map_bar(b)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=2000,
                    help="number of random polynomials")
    ap.add_argument("--width", type=int, default=12,
                    help="terms per polynomial")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = random.Random(7)
    polys = [random_poly(rng, args.width) for _ in range(args.size)]

    t_py = bench(_kernels_py, polys, args.repeat)
    print(f"python kernels: {t_py:.3f}s")
    if _kernels is None:
        print("compiled kernels: not built")
        return
    # correctness spot check before timing
    for a, b in zip(polys[:50], polys[1:51]):
        assert _kernels.map_mul(a, b) == _kernels_py.map_mul(a, b)
        assert _kernels.map_bar(a) == _kernels_py.map_bar(a)
    t_cy = bench(_kernels, polys, args.repeat)
    print(f"compiled kernels: {t_cy:.3f}s")
    print(f"speedup: {t_py / t_cy:.2f}x")


if __name__ == "__main__":
    main()
