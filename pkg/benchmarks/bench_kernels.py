#!/usr/bin/env python3
"""Benchmark the enumeration kernels: numba-jitted loops against the
numpy/python fallback, on full-rank sweeps.

Usage: python benchmarks/bench_kernels.py [--pair-rank 6] [--chain-rank 5]
       [--repeat 3]
"""

import argparse
import time

from crossnest import _kernels as K
from crossnest.enumeration import signed_values_batch


def best_of(fn, arcs, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(arcs)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pair-rank", type=int, default=6)
    parser.add_argument("--chain-rank", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    jobs = [
        ("pair stats", args.pair_rank,
         K.pair_stats_batch_numpy,
         K.pair_stats_batch_numba if K.HAVE_NUMBA else None),
        ("chain stats", args.chain_rank,
         K.chain_stats_batch_python,
         K.chain_stats_batch_numba if K.HAVE_NUMBA else None),
    ]

    print(f"numba available: {K.HAVE_NUMBA}   selected backend: {K.backend()}")
    for name, rank, fallback, jitted in jobs:
        arcs = K.upper_arcs_batch(signed_values_batch(rank))
        print(f"\n{name}, rank {rank} ({arcs.shape[0]} permutations)")
        if jitted is not None:
            jitted(arcs[:2])   # compile outside the timed region
            jit_time = best_of(jitted, arcs, args.repeat)
            print(f"  numba    {jit_time * 1e3:10.2f} ms")
        fb_time = best_of(fallback, arcs, args.repeat)
        print(f"  fallback {fb_time * 1e3:10.2f} ms")
        if jitted is not None:
            agree = (jitted(arcs) == fallback(arcs)).all()
            print(f"  speedup  {fb_time / jit_time:10.1f}x   results agree: {agree}")


if __name__ == "__main__":
    main()
