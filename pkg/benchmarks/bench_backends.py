"""Benchmark the njit kernels against the pure-numpy fallback.

Times the two hot paths (pairwise combination grouping and belief sums) on
random focal sets of growing size. Run from the repo root:

    python benchmarks/bench_backends.py
    python benchmarks/bench_backends.py --sizes 8 32 128 512 --repeats 2000
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from evident import _kernels as K


def random_focals(rng: np.random.Generator, n_atoms: int, count: int):
    full = (1 << n_atoms) - 1
    population = min(count, full)
    bits = np.sort(
        rng.choice(np.arange(1, full + 1, dtype=np.uint64), size=population, replace=False)
    )
    weights = rng.random(population)
    weights /= weights.sum()
    return bits, weights


def best_of(repeats: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[4, 16, 64, 256])
    parser.add_argument("--repeats", type=int, default=500)
    parser.add_argument("--atoms", type=int, default=16)
    args = parser.parse_args()

    if not K.NUMBA_AVAILABLE:
        raise SystemExit("numba is not importable; nothing to compare")

    rng = np.random.default_rng(0)
    print(f"active backend: {K.BACKEND} (EVIDENT_PURE_NUMPY overrides)")
    print(f"{'focals':>7} {'kernel':<18} {'numba':>12} {'numpy':>12} {'speedup':>8}")
    for size in args.sizes:
        b1, w1 = random_focals(rng, args.atoms, size)
        b2, w2 = random_focals(rng, args.atoms, size)
        target = np.uint64((1 << args.atoms) - 1) >> np.uint64(1)

        # warm-up compiles the jitted kernels and fills caches
        K.nb_combine_products(b1, w1, b2, w2)
        K.np_combine_products(b1, w1, b2, w2)
        K.nb_belief_sum(b1, w1, target)
        K.np_belief_sum(b1, w1, target)

        for label, nb_fn, np_fn, call_args in (
            ("combine_products", K.nb_combine_products, K.np_combine_products, (b1, w1, b2, w2)),
            ("belief_sum", K.nb_belief_sum, K.np_belief_sum, (b1, w1, target)),
        ):
            t_nb = best_of(args.repeats, nb_fn, *call_args)
            t_np = best_of(args.repeats, np_fn, *call_args)
            print(
                f"{size:>7} {label:<18} {t_nb * 1e6:>10.1f}us {t_np * 1e6:>10.1f}us"
                f" {t_np / t_nb:>7.1f}x"
            )


if __name__ == "__main__":
    main()
