"""Timing comparison of the compiled and pure compatible-pair kernels.

Runs the grid computation for a set of parameter cases with both
implementations, checks they agree, and prints a small table.

    python3 benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import time

from rank2greedy import kernel

CASES = [
    (5, 5, 2, 2),
    (8, 8, 3, 3),
    (10, 8, 2, 3),
    (12, 10, 2, 2),
    (8, 8, 4, 1),
    (14, 12, 2, 2),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3,
                    help="repetitions per case; the best time is reported")
    args = ap.parse_args()

    if not kernel.HAVE_NATIVE:
        print("compiled kernel not available; timing the pure kernel only")

    print(f"{'a1':>4} {'a2':>4} {'b':>3} {'c':>3} "
          f"{'pure (s)':>10} {'native (s)':>11} {'speedup':>8}")
    for a1, a2, b, c in CASES:
        pure = best_of(
            lambda: kernel.count_grid(a1, a2, b, c, force="pure"), args.repeat)
        row = f"{a1:>4} {a2:>4} {b:>3} {c:>3} {pure:>10.4f}"
        if kernel.HAVE_NATIVE:
            native = best_of(
                lambda: kernel.count_grid(a1, a2, b, c, force="native"),
                args.repeat)
            same = kernel.count_grid(a1, a2, b, c, force="native") == \
                kernel.count_grid(a1, a2, b, c, force="pure")
            row += f" {native:>11.4f} {pure / native:>7.1f}x"
            if not same:
                row += "  MISMATCH"
        print(row)


if __name__ == "__main__":
    main()
