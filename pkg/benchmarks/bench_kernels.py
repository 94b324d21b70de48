"""Benchmark the numba kernels against their pure-numpy fallbacks.

Runs every bulk kernel on a representative workload under both
implementations and prints a timing table with speedups.  The active backend
for normal package use is chosen at import time (numba when available,
overridable with AGDIM_DISABLE_NUMBA=1); this script always times both.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from agdim import kernels


def _workloads():
    gs = np.arange(1, 2_000_001, dtype=np.int64)
    D = np.zeros(4001, dtype=np.int64)
    D[1:] = kernels.dmax_values(np.arange(1, 4001, dtype=np.int64))
    bi = kernels.best_indec_table(20_000)
    return {
        "dmax_values (2e6 genera)": ("dmax_values", (gs,)),
        "piecewise_mismatches (2e6)": ("piecewise_mismatches", (1, 2_000_000)),
        "f_bound_violations (2e6)": ("f_bound_violations", (2, 2_000_000)),
        "superadditivity_scan (g<=4000)": ("superadditivity_scan", (D, 1, 2000)),
        "best_indec_table (2e5)": ("best_indec_table", (200_000,)),
        "mdsp_table (2e4)": ("mdsp_table", (bi,)),
        "pair_efficiency (2000x2000)": ("pair_efficiency_mismatches", (2000, 2000)),
    }


def _best_time(fn, args, repeat: int) -> float:
    fn(*args)  # warmup (and JIT compile for the numba side)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timed runs per kernel")
    args = parser.parse_args()

    impls = kernels.implementations()
    have_numba = "numba" in impls
    print(f"active backend: {kernels.BACKEND}")
    if not have_numba:
        print("numba unavailable or disabled; timing the numpy fallback only\n")

    header = f"{'kernel':34s} {'numpy':>11s}"
    if have_numba:
        header += f" {'numba':>11s} {'speedup':>9s}"
    print(header)
    print("-" * len(header))
    for name, (key, call_args) in _workloads().items():
        t_np = _best_time(impls["numpy"][key], call_args, args.repeat)
        line = f"{name:34s} {t_np * 1e3:9.2f}ms"
        if have_numba:
            t_nb = _best_time(impls["numba"][key], call_args, args.repeat)
            line += f" {t_nb * 1e3:9.2f}ms {t_np / t_nb:8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
