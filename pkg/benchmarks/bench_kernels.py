"""Compare the compiled and pure-Python cashflow kernels.

Runs each kernel on desk-sized workloads and prints a timing table with
the speedup of the compiled backend. Results are medians of repeated
batches so a noisy neighbor does not skew the comparison.

Usage: python3 benchmarks/bench_kernels.py [--repeats N] [--batch N]
"""

import argparse
import statistics
import time

import numpy as np

from slb_decider._kernels import cashflow_py

try:
    from slb_decider._kernels import cashflow_cy
except ImportError:
    cashflow_cy = None


def bench(fn, args, batch, repeats):
    """Median seconds per call of fn(*args) over `repeats` batches."""
    fn(*args)  # warm up
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        for _ in range(batch):
            fn(*args)
        times.append((time.perf_counter() - start) / batch)
    return statistics.median(times)


def workloads():
    indices = np.arange(1, 361, dtype=np.int64)
    amounts = np.full(360, 1234.56)
    return [
        ("annuity_payment 360m", "annuity_payment", (250_000.0, 0.004375, 360)),
        ("amortization 360 rows", "amortization_columns", (250_000.0, 0.004375, 360)),
        ("interest_pv 360m", "interest_pv", (250_000.0, 0.004375, 360, 0.004)),
        ("level_pv 360m", "level_pv", (1234.56, 0.004, 360)),
        ("stream_pv 360 rows", "stream_pv", (indices, amounts, 0.004)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=9, help="timing batches per kernel")
    parser.add_argument("--batch", type=int, default=2000, help="calls per batch")
    args = parser.parse_args()

    if cashflow_cy is None:
        print("compiled kernels are not built; showing the python backend only")

    header = f"{'workload':<24} {'python':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, name, call_args in workloads():
        py_t = bench(getattr(cashflow_py, name), call_args, args.batch, args.repeats)
        if cashflow_cy is None:
            print(f"{label:<24} {py_t * 1e6:>10.2f}us {'-':>12} {'-':>9}")
            continue
        cy_t = bench(getattr(cashflow_cy, name), call_args, args.batch, args.repeats)
        print(
            f"{label:<24} {py_t * 1e6:>10.2f}us {cy_t * 1e6:>10.2f}us "
            f"{py_t / cy_t:>8.1f}x"
        )


if __name__ == "__main__":
    main()
