"""Compare the compiled and pure-Python folding-tree kernels.

Runs every backend over the same workload (all semistandard column pairs
arising in the tableaux of a few shapes) and prints wall times.  Usage::

    python3 benchmarks/bench_kernel.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from glhall import kernel
from glhall.folding import _encode_column, _tables
from glhall.roots import RootDatum
from glhall.tableaux import Shape, enumerate_all_ssyt, vertex_context

WORKLOAD = [("A", 3, (2, 1, 1)), ("B", 3, (1, 1, 1)), ("C", 3, (1, 1, 1)), ("B", 4, (0, 1, 0, 1)), ("C", 4, (1, 0, 1, 0))]


def collect_pairs():
    jobs = set()
    for fam, n, omega in WORKLOAD:
        datum = RootDatum(fam, n)
        for T in enumerate_all_ssyt(Shape(datum, omega)):
            for i in range(T.r):
                ctx = vertex_context(T, i)
                jobs.add(
                    (
                        _encode_column(T.columns[i], fam, n),
                        _encode_column(T.columns[i + 1], fam, n),
                        _tables(ctx),
                    )
                )
    return sorted(jobs)


def run(backend, jobs):
    return [backend.path_stats(left, right, perms) for left, right, perms in jobs]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    jobs = collect_pairs()
    print(f"{len(jobs)} column pairs, best of {args.repeat}")
    results = {}
    timings = {}
    for name, backend in kernel.backends().items():
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            results[name] = run(backend, jobs)
            best = min(best, time.perf_counter() - t0)
        timings[name] = best
        print(f"{name:>7}: {best * 1000:9.1f} ms")
    if len(results) > 1:
        ref = results["python"]
        assert all(r == ref for r in results.values()), "backends disagree"
        if "cython" in timings:
            print(f"speedup: {timings['python'] / timings['cython']:.1f}x")


if __name__ == "__main__":
    main()
