"""Benchmark the finite-field enumeration oracle: numba kernel vs numpy fallback.

The oracle enumerates all p^3 + p^2 + p + 1 projective v over F_p and solves a
10x5 modular linear system for each.  Both paths must return identical counts;
the numba path is the default, the vectorized numpy path is what you get with
CUSPLAB_NO_NUMBA=1.

Usage:
    python benchmarks/bench_oracle.py [--primes 101,103,107] [--repeats 3]
"""

import argparse
import time

from cusplab import oracle
from cusplab.parser import parse_poly
from cusplab.tripleplane import build_condition_system

F2 = "x0^2+x1^2-x2^2"
F3 = "x0^3+x0*x2^2-x1^2*x2"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", default="101,103,107")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    primes = [int(p) for p in args.primes.split(",")]

    system = build_condition_system(parse_poly(F2, 3), parse_poly(F3, 3), "corollary")

    # warm up the JIT so compilation does not pollute the timings
    rows_small = oracle.system_rows_mod_p(system, 11)
    t0 = time.perf_counter()
    oracle._numba_enumerate(rows_small, 11)
    print(f"numba warm-up (p=11, includes compilation): {time.perf_counter() - t0:.2f}s")

    print(f"{'prime':>6} {'reps':>9} {'numba':>10} {'numpy':>10} {'speedup':>8}  counts")
    for p in primes:
        rows = oracle.system_rows_mod_p(system, p)
        n_reps = p ** 3 + p ** 2 + p + 1

        best_nb = min(_timed(oracle._numba_enumerate, rows, p)
                      for _ in range(args.repeats))
        best_np = min(_timed(oracle._numpy_enumerate, rows, p)
                      for _ in range(args.repeats))
        res_nb = oracle._numba_enumerate(rows, p)
        res_np = oracle._numpy_enumerate(rows, p)
        assert res_nb[:4] == res_np[:4], "paths disagree!"
        print(f"{p:>6} {n_reps:>9} {best_nb:>9.3f}s {best_np:>9.3f}s "
              f"{best_np / best_nb:>7.1f}x  lambda!=0: {res_nb[0]}, lambda=0: {res_nb[1]}")


def _timed(fn, rows, p):
    t0 = time.perf_counter()
    fn(rows, p)
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
