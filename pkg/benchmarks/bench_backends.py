#!/usr/bin/env python3
"""Time the compiled scan kernels against the NumPy fallback.

Runs the three kernels on PAut/dual-sized workloads and prints the best
of three wall times per backend.  Use --quick for a faster, smaller run.
"""

import argparse
import itertools
import time

import numpy as np

from z2z4 import AdditiveCode
from z2z4.kernels import available_backends


def best_time(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_lee_weights(impl, rows, alpha):
    return lambda: impl.lee_weights(rows, alpha)


def bench_ambient(impl, gens, alpha, beta):
    return lambda: impl.ambient_orthogonal(gens, alpha, beta)


def bench_paut_loop(impl, mat, alpha, beta):
    perms = [
        np.array(list(sigma) + [alpha + j for j in tau], dtype=np.int64)
        for sigma in itertools.permutations(range(alpha))
        for tau in itertools.permutations(range(beta))
    ]

    def run():
        hits = 0
        for perm in perms:
            if impl.permuted_equals(mat, perm, mat):
                hits += 1
        return hits

    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("note: compiled backend not built, timing the fallback only")

    rng = np.random.default_rng(0)

    if args.quick:
        n_rows, row_alpha, row_beta = 50_000, 4, 4
        amb_alpha, amb_beta = 4, 6
        paut_alpha, paut_beta = 4, 4
    else:
        n_rows, row_alpha, row_beta = 500_000, 8, 8
        amb_alpha, amb_beta = 4, 8
        paut_alpha, paut_beta = 5, 5

    rows = np.concatenate(
        [
            rng.integers(0, 2, size=(n_rows, row_alpha), dtype=np.uint8),
            rng.integers(0, 4, size=(n_rows, row_beta), dtype=np.uint8),
        ],
        axis=1,
    )
    amb_gens = np.concatenate(
        [
            rng.integers(0, 2, size=(2, amb_alpha), dtype=np.uint8),
            rng.integers(0, 4, size=(2, amb_beta), dtype=np.uint8),
        ],
        axis=1,
    )
    gen_word = "".join(
        str(rng.integers(0, 2)) for _ in range(paut_alpha)
    ) + "|" + "".join(str(rng.integers(0, 4)) for _ in range(paut_beta))
    paut_mat = AdditiveCode(paut_alpha, paut_beta, [gen_word]).matrix()

    workloads = [
        (
            f"lee_weights on {n_rows} x {row_alpha + row_beta} rows",
            lambda impl: bench_lee_weights(impl, rows, row_alpha),
        ),
        (
            f"ambient_orthogonal over 2^{amb_alpha} * 4^{amb_beta} "
            f"= {(2 ** amb_alpha) * (4 ** amb_beta)} words",
            lambda impl: bench_ambient(impl, amb_gens, amb_alpha, amb_beta),
        ),
        (
            f"permuted_equals over all {paut_alpha}! * {paut_beta}! pairs "
            f"on a {len(paut_mat)}-word code",
            lambda impl: bench_paut_loop(impl, paut_mat, paut_alpha, paut_beta),
        ),
    ]

    for label, make in workloads:
        print(f"\n{label}")
        times = {}
        for name, impl in sorted(backends.items()):
            times[name] = best_time(make(impl))
            print(f"  {name:>9}: {times[name] * 1000:9.2f} ms")
        if len(times) == 2:
            print(f"  {'speedup':>9}: {times['python'] / times['compiled']:9.1f} x")


if __name__ == "__main__":
    main()
