#!/usr/bin/env python3
"""Benchmark the compiled twist-sum kernel against the numpy fallback.

Times both implementations on divisor coefficients for a range of
truncation lengths and reports throughput plus the relative deviation
between the two results (they use different summation orders, so exact
bitwise equality is not expected; agreement near 1e-13 is).

Usage: python benchmarks/bench_twist_kernel.py [--max-terms 30000000]
"""

import argparse
import time

from lfclass import kernel
from lfclass.coefficients import divisor_source


def bench(fn, coeffs, alpha, X, repeat=3):
    best = float("inf")
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn(coeffs, alpha, X)
        best = min(best, time.perf_counter() - t0)
    return value, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-terms", type=int, default=30_000_000)
    args = ap.parse_args()

    print("compiled kernel available:", kernel.HAVE_COMPILED)
    src = divisor_source()
    header = "%12s %12s %12s %9s %12s" % (
        "terms", "compiled s", "fallback s", "speedup", "rel dev")
    print(header)
    print("-" * len(header))
    n = 100_000
    while n <= args.max_terms:
        coeffs = src.values(n)
        alpha, X = 2.0, n / 30.0
        a, ta = bench(kernel.twist_sum, coeffs, alpha, X)
        b, tb = bench(lambda c, al, x: kernel.twist_sum(
            c, al, x, force_python=True), coeffs, alpha, X)
        dev = abs(a - b) / max(1e-300, abs(a))
        print("%12d %12.4f %12.4f %8.1fx %12.2e" % (n, ta, tb, tb / ta, dev))
        n *= 10


if __name__ == "__main__":
    main()
