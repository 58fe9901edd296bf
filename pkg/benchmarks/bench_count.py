"""Time the monomial-counting kernels: numba walk vs. numpy enumeration.

    python benchmarks/bench_count.py [--repeat 3] [--tmax 30]

Both backends are checked for identical tables before timing is reported.
"""
import argparse
import time

from hilbsign.oracle import MonomialIdeal
from hilbsign.oracle import _kernels

CASES = [
    ("k[x1..x4]/(x1*x2)", MonomialIdeal(4, ((1, 1, 0, 0),))),
    ("k[x1..x5]/(x1^2, x2*x3, x4^3)", MonomialIdeal(5, ((2, 0, 0, 0, 0), (0, 1, 1, 0, 0), (0, 0, 0, 3, 0)))),
    ("k[x1..x6]/(x1*x2, x3*x4, x5*x6)", MonomialIdeal(6, ((1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 1, 1)))),
    ("k[x1..x6]/(x1^2..x6^2)", MonomialIdeal(6, tuple(tuple(2 if i == j else 0 for j in range(6)) for i in range(6)))),
]


def table(fn, ideal, tmax):
    gens = ideal.as_array()
    return [fn(gens, t) for t in range(tmax + 1)]


def best_of(fn, ideal, tmax, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        table(fn, ideal, tmax)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--tmax", type=int, default=30)
    args = ap.parse_args()

    if not _kernels.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")
    t0 = time.perf_counter()
    _kernels.count_numba(CASES[0][1].as_array(), 2)
    print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.2f}s\n")

    print(f"{'ideal':<36}{'numba [s]':>12}{'numpy [s]':>12}{'speedup':>10}")
    for name, ideal in CASES:
        a = table(_kernels.count_numba, ideal, args.tmax)
        b = table(_kernels.count_numpy, ideal, args.tmax)
        if a != b:
            raise SystemExit(f"backends disagree on {name}")
        tn = best_of(_kernels.count_numba, ideal, args.tmax, args.repeat)
        tp = best_of(_kernels.count_numpy, ideal, args.tmax, args.repeat)
        print(f"{name:<36}{tn:>12.4f}{tp:>12.4f}{tp / tn:>9.1f}x")


if __name__ == "__main__":
    main()
