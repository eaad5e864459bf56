"""Time the numba kernels against their numpy counterparts.

    python benchmarks/bench_kernels.py [--repeat N]

Both paths are run regardless of INVGROUPOID_DISABLE_NUMBA.  The first numba
call is timed separately as compile (or cache load) time.
"""

import argparse
import timeit

import numpy as np

from invgroupoid import kernels


def cases():
    order3 = kernels.all_tables(3)
    semigroups3 = order3[kernels.associative_mask_numpy(order3)]
    semigroups4 = kernels.backtrack_semigroups_numpy(4)
    rng = np.random.default_rng(0)
    big = rng.integers(0, 40, size=(40, 40))
    z40 = (np.arange(40)[:, None] + np.arange(40)[None, :]) % 40
    return [
        ("associative_mask, all order-3 tables", "associative_mask", (order3,)),
        ("vagner_flags, order-3 semigroups", "vagner_flags", (semigroups3,)),
        ("vagner_flags, order-4 semigroups", "vagner_flags", (semigroups4,)),
        ("first_nonassociative, random 40x40", "first_nonassociative", (big,)),
        ("first_nonassociative, Z40 (full scan)", "first_nonassociative", (z40,)),
        ("backtrack_semigroups, order 4", "backtrack_semigroups", (4,)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"{'kernel':42s} {'numba first':>12s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for label, name, call_args in cases():
        fast = getattr(kernels, f"{name}_numba")
        slow = getattr(kernels, f"{name}_numpy")
        first = timeit.timeit(lambda: fast(*call_args), number=1)
        t_fast = min(timeit.repeat(lambda: fast(*call_args), number=1, repeat=args.repeat))
        t_slow = min(timeit.repeat(lambda: slow(*call_args), number=1, repeat=args.repeat))
        print(f"{label:42s} {first * 1e3:10.2f}ms {t_fast * 1e3:8.3f}ms {t_slow * 1e3:8.3f}ms {t_slow / t_fast:7.1f}x")


if __name__ == "__main__":
    main()
