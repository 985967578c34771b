"""Compare the numpy and numba kernel backends on representative workloads.

Usage: python benchmarks/bench_kernels.py [--repeats N]
Each kernel is timed as best-of-N after a warmup pass, and both backends
are checked to produce identical arrays before timing.
"""

import argparse
import time

import numpy as np

from locfields._kernels import BACKENDS, load_backend


def _workloads(rng):
    p = 1_000_003
    m = 3_000_017
    deg_a = rng.integers(0, p, 512)
    deg_a[-1] = 1
    deg_b = rng.integers(0, p, 256)
    deg_b[-1] = 1
    vec_a = rng.integers(1, m, 300)
    vec_b = rng.integers(1, m, 300)
    return [
        ("fp_mul", "deg 511 x deg 255 mod 1e6+3",
         lambda k: k(deg_a, deg_b, p)),
        ("fp_rem", "deg 511 by monic deg 255",
         lambda k: k(deg_a, deg_b, p)),
        ("mod_outer", "300 x 300 products mod 3e6+17",
         lambda k: k(vec_a, vec_b, m)),
        ("pow_block", "100000 powers of 5 mod 1e6+3",
         lambda k: k(5, 100_000, p)),
        ("spf_sieve", "least prime factors to 500000",
         lambda k: k(500_000)),
    ]


def _best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    numpy_backend = BACKENDS["numpy"]
    try:
        numba_backend = load_backend("numba")
    except ImportError:
        print("numba is not installed; nothing to compare")
        return 0

    rng = np.random.default_rng(12345)
    rows = []
    for name, desc, call in _workloads(rng):
        ref = call(numpy_backend[name])
        jit = call(numba_backend[name])  # also pays compilation here
        if not np.array_equal(ref, jit):
            raise AssertionError(f"backends disagree on {name}")
        t_np = _best_of(lambda: call(numpy_backend[name]), args.repeats)
        t_nb = _best_of(lambda: call(numba_backend[name]), args.repeats)
        rows.append((name, desc, t_np, t_nb))

    print(f"{'kernel':<10} {'workload':<34} {'numpy':>10} "
          f"{'numba':>10} {'ratio':>7}")
    for name, desc, t_np, t_nb in rows:
        ratio = t_np / t_nb if t_nb > 0 else float("inf")
        print(f"{name:<10} {desc:<34} {t_np * 1e3:>8.3f}ms "
              f"{t_nb * 1e3:>8.3f}ms {ratio:>6.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
