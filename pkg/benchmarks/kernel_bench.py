"""Benchmark the subset-table kernel tiers against each other.

Builds random integer inputs at several sizes and times compute_table under
every available tier (numba JIT, vectorized numpy, pure Python). The numba
tier is warmed once so JIT compilation is not billed to the measurement.

Usage:
    python benchmarks/kernel_bench.py [--sizes 100,400,1000] [--repeats 3]
"""

import argparse
import random
import time

from convexdiff.kernels import available_tiers, compute_table


def _workload(rng: random.Random, m: int) -> list[int]:
    vals = [rng.randrange(0, 5)]
    for _ in range(m - 1):
        vals.append(vals[-1] + rng.randrange(1, 60))
    return vals


def _time_tier(values: list[int], tier: str, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        compute_table(values, force=tier)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="100,400,1000",
                        help="comma-separated table sizes")
    parser.add_argument("--repeats", type=int, default=3,
                        help="timing repeats per cell (best is reported)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    sizes = [int(t) for t in args.sizes.split(",") if t.strip()]
    tiers = list(available_tiers())
    rng = random.Random(args.seed)

    if "numba" in tiers:
        compute_table(_workload(rng, 8), force="numba")  # warm the JIT cache

    header = ["m"] + [f"{t} (s)" for t in tiers] + ["agree"]
    rows = []
    for m in sizes:
        values = _workload(rng, m)
        timings = []
        tables = []
        for tier in tiers:
            timings.append(_time_tier(values, tier, args.repeats))
            table, _ = compute_table(values, force=tier)
            tables.append([[int(x) for x in row] for row in table])
        agree = all(t == tables[0] for t in tables[1:])
        rows.append([str(m)] + [f"{s:.4f}" for s in timings] + ["yes" if agree else "NO"])

    widths = [max(len(r[c]) for r in [header] + rows) for c in range(len(header))]
    for r in [header] + rows:
        print("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
