"""The cross-module invariant suite behind the ``verify`` CLI command.

Each check runs an exhaustive (small-p) verification of one structural
property and reports the first counterexample on failure.  Checks resolve
the functions they exercise through their modules at call time, so a fault
injected into any single operation is caught by the affected check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from . import errors, ising, kernels, maximizer, patterns, transform
from .rng import random_image


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str  # scope on success, first counterexample on failure


def _shift_multiset(p: int, t: int) -> list[int]:
    out: list[int] = []
    for r in range(p):
        if t >> r & 1:
            out.extend(patterns.shift_set(p, r).abscissas)
    return out


def check_constructions(ps: Iterable[int]) -> CheckResult:
    """Recursive, bit-sum and cumulative builds agree for every slope."""
    for p in ps:
        for t in range(1 << p):
            params = patterns.PatternParams(p, t)
            rec = patterns.pattern_recursive(params)
            bit = patterns.pattern_sum(params)
            cum = patterns.cumulative_build(p, _shift_multiset(p, t))
            if not (patterns.patterns_equal(rec, bit)
                    and patterns.patterns_equal(bit, cum)):
                return CheckResult(
                    "construction-equivalence", False,
                    f"p={p} t={t}: recursive={rec.ordinates} "
                    f"bit-sum={bit.ordinates} cumulative={cum.ordinates}")
    return CheckResult("construction-equivalence", True, "all slopes agree")


def check_symmetry(ps: Iterable[int]) -> CheckResult:
    """Centered error antisymmetry: paired residuals are exactly zero."""
    for p in ps:
        for t in range(1 << p):
            for y in range(1 << (p - 1)):
                r = errors.symmetry_residual(p, t, y)
                if r.num != 0:
                    return CheckResult("center-symmetry", False,
                                       f"p={p} t={t} y={y}: residual {r}")
    return CheckResult("center-symmetry", True, "all residuals zero")


def check_interchange(ps: Iterable[int]) -> CheckResult:
    """Slope and abscissa are interchangeable in the error."""
    for p in ps:
        for t in range(1 << p):
            for x in range(1 << p):
                r = errors.interchange_residual(p, t, x)
                if r.num != 0:
                    return CheckResult("slope-abscissa-interchange", False,
                                       f"p={p} t={t} x={x}: residual {r}")
    return CheckResult("slope-abscissa-interchange", True, "all residuals zero")


def check_bridge(ps: Iterable[int]) -> CheckResult:
    """Peak error equals the cyclic-table maximum over 2**p - 1."""
    for p in ps:
        peak = errors.global_max_error(p).value
        table_max = int(kernels.table_sums(p).max())
        if peak.num != table_max:
            return CheckResult("peak-error-bridge", False,
                               f"p={p}: scan num {peak.num} != table max {table_max}")
    return CheckResult("peak-error-bridge", True, "scan and table maxima agree")


def check_table_identities(ps: Iterable[int]) -> CheckResult:
    """Leading-bit substitution/transposition identities of the table sum."""
    for p in ps:
        if p < 2:
            continue
        for x in range(1 << (p - 1)):
            res = maximizer.table_identity_residuals(p, x)
            if res.substitution != 0 or res.transposition != 0:
                return CheckResult("table-identities", False,
                                   f"p={p} x={x}: residuals {res}")
    return CheckResult("table-identities", True, "all residuals zero")


def check_closed_forms(ps: Iterable[int]) -> CheckResult:
    """Exact peak-error values: p/6 for even p, the 2**p-corrected form for odd."""
    for p in ps:
        m = (1 << p) - 1
        got = errors.global_max_error(p)
        if p % 2 == 0:
            if p * m % 6 != 0 or got.value.num != p * m // 6:
                return CheckResult(
                    "peak-error-closed-form", False,
                    f"p={p}: expected num {p * m / 6}, got {got.value.num}")
            lo = (1 << p) // 3
            hi = (1 << (p + 1)) // 3
            if (lo, lo) not in got.attaining or (hi, hi) not in got.attaining:
                return CheckResult(
                    "peak-error-closed-form", False,
                    f"p={p}: diagonal pairs ({lo},{lo}),({hi},{hi}) "
                    f"not in attaining set {sorted(got.attaining)}")
        else:
            want = 3 * p * m - (1 << p) - 1
            if want % 18 != 0 or got.value.num != want // 18:
                return CheckResult(
                    "peak-error-closed-form", False,
                    f"p={p}: expected num {want / 18}, got {got.value.num}")
    return CheckResult("peak-error-closed-form", True, "peak values match")


def check_pruning(ps: Iterable[int]) -> CheckResult:
    """Pruned and unpruned maximizer searches return identical reports."""
    for p in ps:
        if p < 2:
            continue
        pruned = maximizer.search_maximizers(p, use_pruning=True)
        plain = maximizer.search_maximizers(p, use_pruning=False)
        if (pruned.max_sum != plain.max_sum
                or pruned.argmax_xs != plain.argmax_xs):
            return CheckResult(
                "pruning-consistency", False,
                f"p={p}: pruned ({pruned.max_sum}, {sorted(pruned.argmax_xs)}) "
                f"!= plain ({plain.max_sum}, {sorted(plain.argmax_xs)})")
    return CheckResult("pruning-consistency", True, "searches agree")


def check_spin_bridge(ps: Iterable[int]) -> CheckResult:
    """Affine word-functional/spin-quadratic identity and optimizer match."""
    for p in ps:
        for x in range(1 << p):
            r = ising.affine_bridge_residual(p, x)
            if r.num != 0:
                return CheckResult("spin-model-bridge", False,
                                   f"p={p} x={x}: affine residual {r}")
        table = kernels.table_sums(p)
        table_arg = frozenset(int(i) for i in
                              np.nonzero(table == table.max())[0])
        f_arg = ising.functional_maximizers(p)
        q_arg = ising.quadratic_minimizers(p)
        if f_arg != q_arg or f_arg != table_arg:
            return CheckResult(
                "spin-model-bridge", False,
                f"p={p}: optimizer sets differ (functional {sorted(f_arg)}, "
                f"quadratic {sorted(q_arg)}, table {sorted(table_arg)})")
    return CheckResult("spin-model-bridge", True, "identity holds, optimizers agree")


def check_transform_oracle(ps: Iterable[int], seed: int) -> CheckResult:
    """Butterfly transform equals the brute-force oracle on seeded images."""
    for p in ps:
        n = 1 << p
        if n > 64:
            continue  # oracle cost grows as n^3; larger sides add nothing here
        img = transform.ImageGrid.from_array(random_image(n, seed + p))
        fast = transform.fht_quadrant(img)
        brute = transform.hough_brute(img)
        if not np.array_equal(fast.cells, brute.cells):
            t, s = np.argwhere(fast.cells != brute.cells)[0]
            return CheckResult(
                "transform-oracle", False,
                f"n={n} seed={seed + p}: cell ({t},{s}) "
                f"{fast.cells[t, s]} != {brute.cells[t, s]}")
    return CheckResult("transform-oracle", True, "transform matches oracle")


def run_all(p_min: int, p_max: int, seed: int = 1) -> list[CheckResult]:
    """Run every check over p in [p_min, p_max]; range must be non-empty."""
    if p_min < 1 or p_max < p_min:
        raise ValueError(f"empty or invalid range p={p_min}..{p_max}")
    ps = range(p_min, p_max + 1)
    checks: list[Callable[[], CheckResult]] = [
        lambda: check_constructions(ps),
        lambda: check_symmetry(ps),
        lambda: check_interchange(ps),
        lambda: check_bridge(ps),
        lambda: check_table_identities(ps),
        lambda: check_closed_forms(ps),
        lambda: check_pruning(ps),
        lambda: check_spin_bridge(ps),
        lambda: check_transform_oracle(ps, seed),
    ]
    return [check() for check in checks]
