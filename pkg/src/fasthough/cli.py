"""Command-line front end: transforms, scans and CSV emission.

Exit codes: 0 success, 1 I/O failure, 2 bad parameters (including scan
caps), 3 verification failure.  All CSV output has a fixed header row, LF
line endings, and decimal approximations rendered at 12 significant digits
next to the exact num/den columns.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import sys
from pathlib import Path

import numpy as np

from . import errors, ising, kernels, maximizer, patterns, transform, verification
from .pgm import read_pgm

_QUAD_BY_TAG = {q.value: q for q in transform.Quadrant}


def _out_stream(path: str | None):
    if path is None:
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w", newline="")


def _writer(fh):
    return csv.writer(fh, lineterminator="\n")


def _approx(num: int, den: int) -> str:
    return f"{num / den:.12g}"


# -- subcommands ---------------------------------------------------------------


def _write_accumulator(acc: transform.HoughAccumulator, fh) -> None:
    w = _writer(fh)
    w.writerow(["t", "s", "value"])
    cells = acc.cells
    for t in range(cells.shape[0]):
        for s in range(cells.shape[1]):
            w.writerow([t, s, int(cells[t, s])])


def cmd_fht(args) -> int:
    grid = transform.ImageGrid.from_array(read_pgm(args.input))
    if args.quadrant == "all":
        if args.out is None:
            raise ValueError("--quadrant all needs --out to name the four files")
        base = Path(args.out)
        for quad, acc in transform.fht_full(grid).items():
            path = base.with_suffix(f".{quad.value}.csv")
            with open(path, "w", newline="") as fh:
                _write_accumulator(acc, fh)
            print(path)
        return 0
    quad = _QUAD_BY_TAG[args.quadrant]
    view = np.ascontiguousarray(quad.transform_pixels(grid.pixels))
    acc = transform.fht_quadrant(transform.ImageGrid.from_array(view))
    with _out_stream(args.out) as fh:
        _write_accumulator(acc, fh)
    return 0


_BUILDERS = {
    "recursive": lambda params: patterns.pattern_recursive(params),
    "bitsum": lambda params: patterns.pattern_sum(params),
    "cumulative": lambda params: patterns.cumulative_build(
        params.p,
        [a for r in range(params.p) if params.t >> r & 1
         for a in patterns.shift_set(params.p, r).abscissas],
        params.s),
}


def cmd_pattern(args) -> int:
    params = patterns.PatternParams(args.p, args.t, args.s)
    pattern = _BUILDERS[args.method](params)
    with _out_stream(args.out) as fh:
        w = _writer(fh)
        w.writerow(["x", "y"])
        for x, y in enumerate(pattern.ordinates):
            w.writerow([x, y])
    return 0


def cmd_error_scan(args) -> int:
    profile = errors.per_slope_profile(args.p, workers=args.workers)
    if args.out is not None:
        with open(args.out, "w", newline="") as fh:
            w = _writer(fh)
            w.writerow(["t", "num", "den", "approx"])
            for t, value in enumerate(profile.per_slope_max):
                w.writerow([t, value.num, value.den, value.approx()])
    peak = max(v.num for v in profile.per_slope_max)
    den = (1 << args.p) - 1
    print(f"{args.p},{peak},{den},{_approx(peak, den)}")
    return 0


def cmd_error_hist(args) -> int:
    hist = errors.error_histogram(args.p, args.bins, workers=args.workers)
    with _out_stream(args.out) as fh:
        w = _writer(fh)
        w.writerow(["bin_lo", "bin_hi", "count"])
        for i, count in enumerate(hist.counts):
            lo, hi = hist.bin_edges[i], hist.bin_edges[i + 1]
            w.writerow([f"{float(lo):.12g}", f"{float(hi):.12g}", count])
    return 0


def cmd_maximizer(args) -> int:
    report = maximizer.search_maximizers(args.p, use_pruning=not args.no_prune,
                                         workers=args.workers)
    if args.out is not None:
        sums = kernels.table_sums(args.p)
        with open(args.out, "w", newline="") as fh:
            w = _writer(fh)
            w.writerow(["x", "binary_word", "S"])
            for x in range(1 << args.p):
                w.writerow([x, format(x, f"0{args.p}b"), int(sums[x])])
    den = (1 << args.p) - 1
    argmax = ";".join(str(x) for x in sorted(report.argmax_xs))
    print(f"{args.p},{report.max_sum},{den},{_approx(report.max_sum, den)},"
          f"{report.pruned_count},{argmax}")
    return 0


def cmd_ising(args) -> int:
    f_nums = ising.functional_numerators(args.p)
    q_nums = ising.quadratic_numerators(args.p)
    den = 1 << (args.p - 1)
    with _out_stream(args.out) as fh:
        w = _writer(fh)
        w.writerow(["x", "F_num", "F_den", "Q_num", "Q_den", "energy"])
        for x in range(1 << args.p):
            energy = _approx(-int(q_nums[x]), den)  # pair energy is -Q
            w.writerow([x, int(f_nums[x]), den, int(q_nums[x]), den, energy])
    return 0


def cmd_verify(args) -> int:
    results = verification.run_all(args.p_min, args.p_max, args.seed)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.name:<{width}}  {r.detail}")
    failures = [r for r in results if not r.passed]
    if failures:
        print(f"error: {failures[0].name}: {failures[0].detail}", file=sys.stderr)
        return 3
    return 0


# -- parser --------------------------------------------------------------------


def _add_common(sub, p_required=True, workers=False, out=True):
    if p_required:
        sub.add_argument("--p", type=int, required=True,
                         help="grid exponent (image side 2**p)")
    if out:
        sub.add_argument("--out", help="output CSV path (default stdout)")
    if workers:
        sub.add_argument("--workers", type=int, default=1,
                         help="worker processes for the scan (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fasthough",
        description="Fast Hough transform over dyadic line patterns and the "
                    "exact analysis of their line-approximation error.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("fht", help="accumulate a PGM image")
    sub.add_argument("input", help="square power-of-two PGM image (P2 or P5)")
    sub.add_argument("--quadrant", choices=["hr", "hl", "vr", "vl", "all"],
                     default="hr", help="slope family (default hr)")
    _add_common(sub, p_required=False)
    sub.set_defaults(func=cmd_fht)

    sub = subs.add_parser("pattern", help="emit one dyadic pattern")
    _add_common(sub)
    sub.add_argument("--t", type=int, required=True, help="slope in pixels")
    sub.add_argument("--s", type=int, default=0, help="intercept (default 0)")
    sub.add_argument("--method", choices=sorted(_BUILDERS), default="bitsum")
    sub.set_defaults(func=cmd_pattern)

    sub = subs.add_parser("error-scan",
                          help="per-slope peak errors plus a summary line")
    _add_common(sub, workers=True)
    sub.set_defaults(func=cmd_error_scan)

    sub = subs.add_parser("error-hist", help="exact error histogram")
    _add_common(sub, workers=True)
    sub.add_argument("--bins", type=int, default=101,
                     help="bin count on [-p/2, p/2] (default 101)")
    sub.set_defaults(func=cmd_error_hist)

    sub = subs.add_parser("maximizer", help="search the cyclic-table maximum")
    _add_common(sub, workers=True)
    sub.add_argument("--no-prune", action="store_true",
                     help="disable the non-maximizer pattern filters")
    sub.set_defaults(func=cmd_maximizer)

    sub = subs.add_parser("ising", help="word functional and spin quadratic table")
    _add_common(sub)
    sub.set_defaults(func=cmd_ising)

    sub = subs.add_parser("verify", help="run the cross-module invariant suite")
    sub.add_argument("--p-min", type=int, default=2)
    sub.add_argument("--p-max", type=int, default=6)
    sub.add_argument("--seed", type=int, default=1,
                     help="seed for the transform-oracle images")
    sub.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return 0 if exc.code in (0, None) else 2
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:  # parameter and cap errors
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
