#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Times the two hot paths on workloads shaped like the real ones: dense
Horner evaluation of long truncations over scan grids, and the polyline
self-intersection sweep at render resolution.
"""

from __future__ import annotations

import argparse
import time

import numpy as np


def available_backends():
    from harmomap import _kernels_py

    backends = [("python", _kernels_py)]
    try:
        from harmomap import _kernels

        backends.insert(0, ("cython", _kernels))
    except ImportError:
        pass
    return backends


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_polyval(kernels, repeat):
    rng = np.random.default_rng(0)
    coeffs = (rng.normal(size=4097) + 1j * rng.normal(size=4097)) / np.arange(1, 4098) ** 2
    theta = 2 * np.pi * np.arange(16384) / 16384
    pts = 0.99 * np.exp(1j * theta)
    return timeit(lambda: kernels.polyval_many(coeffs, pts), repeat)


def bench_crossing(kernels, repeat):
    # the non-univalent cubic sampled at high resolution: one real crossing
    theta = 2 * np.pi * np.arange(8192) / 8192
    z = 0.995 * np.exp(1j * theta)
    pts = z - z * z / 2 + np.conj(z * z / 2 - z ** 3 / 3)
    xs = np.ascontiguousarray(pts.real)
    ys = np.ascontiguousarray(pts.imag)
    return timeit(lambda: kernels.first_crossing(xs, ys, 1e-9), repeat)


def bench_crossing_clean(kernels, repeat):
    # worst case: no crossing, the full O(M^2) pair sweep runs to the end
    theta = 2 * np.pi * np.arange(4096) / 4096
    z = 0.99 * np.exp(1j * theta)
    pts = z - 0.3 * z * z + np.conj(z * z / 2 - 0.2 * z ** 3)
    xs = np.ascontiguousarray(pts.real)
    ys = np.ascontiguousarray(pts.imag)
    return timeit(lambda: kernels.first_crossing(xs, ys, 1e-9), repeat)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = available_backends()
    cases = [
        ("polyval 4k coeffs x 16k points", bench_polyval),
        ("crossing sweep 8k (hit)", bench_crossing),
        ("crossing sweep 4k (clean)", bench_crossing_clean),
    ]
    results = {}
    for name, kernels in backends:
        for case, fn in cases:
            results[(case, name)] = fn(kernels, args.repeat)

    width = max(len(c) for c, _ in cases)
    names = [n for n, _ in backends]
    header = f"{'case':<{width}}  " + "  ".join(f"{n:>10}" for n in names)
    if len(names) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for case, _ in cases:
        row = f"{case:<{width}}  " + "  ".join(
            f"{results[(case, n)] * 1e3:>8.2f}ms" for n in names
        )
        if len(names) == 2:
            row += f"  {results[(case, names[1])] / results[(case, names[0])]:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
