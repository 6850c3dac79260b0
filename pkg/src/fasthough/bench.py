"""Benchmark the compiled kernels against the numpy fallback.

Usage::

    python -m fasthough.bench [--fht-sizes 128,256,512] [--scan-p 10,12]
                              [--repeat 3] [--csv out.csv]

Each kernel runs on identical inputs under every available backend; the
fastest of ``--repeat`` runs is reported, plus the c-over-py speedup when
both backends exist.  Outputs are cross-checked for equality while timing.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

import numpy as np

from .kernels import available_backends, get_backend
from .rng import random_image


def _best_time(fn, repeat: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def _cases(fht_sizes, scan_ps):
    for n in fht_sizes:
        img = random_image(n, seed=7)
        yield (f"fht n={n}", lambda be, img=img: be.fht_accumulate(img)[0])
    for p in scan_ps:
        yield (f"slope-scan p={p}", lambda be, p=p: be.per_slope_max(p))
        yield (f"histogram p={p}", lambda be, p=p: be.hist_counts(p, 101))
        yield (f"table-sums p={p}", lambda be, p=p: be.table_sums(p))


def run(fht_sizes, scan_ps, repeat: int):
    backends = available_backends()
    rows = []
    for name, call in _cases(fht_sizes, scan_ps):
        times = {}
        results = {}
        for tag in backends:
            times[tag], results[tag] = _best_time(
                lambda tag=tag: call(get_backend(tag)), repeat)
        if len(backends) == 2 and not np.array_equal(results["c"], results["py"]):
            raise AssertionError(f"backend results differ for {name}")
        rows.append((name, times))
    return backends, rows


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--fht-sizes", default="128,256,512")
    parser.add_argument("--scan-p", default="10,12")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--csv", help="also write the table as CSV")
    args = parser.parse_args(argv)

    fht_sizes = [int(v) for v in args.fht_sizes.split(",") if v]
    scan_ps = [int(v) for v in args.scan_p.split(",") if v]
    backends, rows = run(fht_sizes, scan_ps, args.repeat)

    if "c" not in backends:
        print("note: compiled backend unavailable; timing the fallback only")
    header = ["case"] + [f"{tag} [ms]" for tag in backends]
    if len(backends) == 2:
        header.append("speedup")
    print(f"{header[0]:<20}" + "".join(f"{h:>14}" for h in header[1:]))
    table = []
    for name, times in rows:
        cells = [f"{times[tag] * 1e3:.2f}" for tag in backends]
        if len(backends) == 2:
            cells.append(f"{times['py'] / times['c']:.1f}x")
        print(f"{name:<20}" + "".join(f"{c:>14}" for c in cells))
        table.append([name] + cells)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(table)
    return 0


if __name__ == "__main__":
    sys.exit(main())
