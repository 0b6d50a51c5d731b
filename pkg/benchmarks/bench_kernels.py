#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Usage:  python benchmarks/bench_kernels.py [--repeat N]

Exercises the four hot kernels at sweep-realistic sizes and prints a
table with per-call times and the compiled/fallback speedup.
"""

import argparse
import time

import numpy as np

from revivalscope.kernels import _ref

try:
    from revivalscope.kernels import _fast
except ImportError:
    _fast = None


def _best_of(fn, repeat):
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    rng = np.random.default_rng(1)
    energies = (np.arange(340, 461) * np.pi) ** 2
    times = np.linspace(0.0, 0.64, 512)
    airy_args = rng.uniform(-130.0, 10.0, 400_000)
    xi = 2 * 29.6 * np.exp(-2.079 * np.linspace(-0.8, 4.0, 4096))
    rho = rng.random(65536)
    rho[rho < 0.3] = 0.0
    yield ("phase_table 512x121",
           lambda m: m.phase_table(energies, times))
    yield ("airy_ai 400k",
           lambda m: m.airy_ai_values(airy_args))
    yield ("airy_ai_prime 400k",
           lambda m: m.airy_ai_prime_values(airy_args))
    yield ("laguerre n=29 4096",
           lambda m: m.laguerre_values(29, 0.2, xi))
    yield ("entropy_integral 65536",
           lambda m: m.entropy_integral(rho, 1e-4))
    yield ("simpson_integral 65536",
           lambda m: m.simpson_integral(rho, 1e-4))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if _fast is None:
        print("compiled backend not built; only the fallback will run")

    header = f"{'kernel':<26} {'numpy (ms)':>12} {'cython (ms)':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, call in cases():
        t_ref = _best_of(lambda: call(_ref), args.repeat) * 1e3
        if _fast is not None:
            t_fast = _best_of(lambda: call(_fast), args.repeat) * 1e3
            print(f"{name:<26} {t_ref:>12.3f} {t_fast:>12.3f} {t_ref / t_fast:>8.1f}x")
        else:
            print(f"{name:<26} {t_ref:>12.3f} {'-':>12} {'-':>9}")


if __name__ == "__main__":
    main()
