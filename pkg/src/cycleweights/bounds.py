"""Cycle-weight bounds on 4- and 5-point configurations.

For squared-distance weights every Hamiltonian cycle E on 4 points
satisfies

    1/2 <= w(E) / w(K4) < 1

(lower bound attained, upper bound approached but never reached), and
on 5 points

    (5 - sqrt(5))/10 <= w(E) / w(K5) <= (5 + sqrt(5))/10

with both ends attained (regular pentagon).  On 5 points the
complement of a cycle is again a cycle and the two ratios sum to 1
exactly, which makes the two K5 bounds equivalent statements.

Float mode classifies each cycle with a tolerance band around the
bounds; rational mode decides everything exactly, comparing against
sqrt(5) via the squaring transform  t = 10 w(E) - 5 w(K5):
both bounds together are |t| <= sqrt(5) w(K5), i.e. t^2 <= 5 w(K5)^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .checks import (
    DEGENERATE,
    HOLDS,
    HOLDS_WITH_EQUALITY,
    REL_TOL_DERIVED,
    VIOLATED,
)
from .cycles import Cycle, complement_cycle, enumerate_cycles
from .errors import DegenerateError, UsageError
from .geometry import Configuration, FLOAT, MODES, RATIONAL, random_config, squared_distance
from .prng import MASK64, mix64

K4_LOWER = 0.5
K5_LOWER = (5 - math.sqrt(5)) / 10
K5_UPPER = (5 + math.sqrt(5)) / 10


@dataclass(frozen=True)
class CycleRow:
    """One checked cycle: weights, ratio, and its verdict."""

    config_id: int
    cycle: Cycle
    w_cycle: object
    w_complement: object
    w_total: object
    ratio: object  # None when the total weight is zero
    verdict: str


@dataclass(frozen=True)
class BoundReport:
    """Aggregate over all checked cycles of one or many configurations.

    ``rows`` carries every row for single-configuration checks but only
    the interesting (violated/degenerate) rows under fuzzing.
    """

    n: int
    mode: str
    tolerance: float
    trials: int
    checks: int
    violations: int
    degenerate: int
    equalities: int
    min_ratio: object
    max_ratio: object
    rows: tuple


@dataclass(frozen=True)
class DualityRow:
    cycle: Cycle
    complement: Cycle
    ratio: object
    complement_ratio: object
    residual: object  # ratio + complement_ratio - 1
    lower_attained: bool
    upper_attained: bool


@dataclass(frozen=True)
class DualityReport:
    mode: str
    tolerance: float
    verdict: str
    rows: tuple


def _pair_weights(points) -> dict:
    w = {}
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            w[(i, j)] = squared_distance(points[i], points[j])
    return w


def _cycle_weight_from(pairs: dict, cycle: Cycle):
    o = cycle.order
    n = len(o)
    total = 0
    for k in range(n):
        a, b = o[k], o[(k + 1) % n]
        total += pairs[(a, b) if a < b else (b, a)]
    return total


def _classify_k4(w_e, w_k, tolerance: float, mode: str):
    """Verdict for 1/2 w(K4) <= w(E) < w(K4) on one cycle."""
    if w_k == 0:
        return None, DEGENERATE
    ratio = w_e / w_k
    w_d = w_k - w_e
    if mode == RATIONAL:
        if w_d == 0:
            # upper end: only reachable when two points coincide
            return ratio, DEGENERATE
        if 2 * w_e < w_k:
            return ratio, VIOLATED
        if 2 * w_e == w_k:
            return ratio, HOLDS_WITH_EQUALITY
        return ratio, HOLDS
    if w_d <= tolerance * w_k:
        return ratio, DEGENERATE
    if ratio < K4_LOWER - tolerance:
        return ratio, VIOLATED
    if abs(ratio - K4_LOWER) <= tolerance:
        return ratio, HOLDS_WITH_EQUALITY
    return ratio, HOLDS


def _classify_k5(w_e, w_k, tolerance: float, mode: str):
    """Verdict for (5 -+ sqrt(5))/10 bounds on one cycle."""
    if w_k == 0:
        return None, DEGENERATE
    ratio = w_e / w_k
    if mode == RATIONAL:
        t = 10 * w_e - 5 * w_k
        inside = t * t < 5 * w_k * w_k
        if inside:
            return ratio, HOLDS
        if t * t == 5 * w_k * w_k:
            # sqrt(5) w_k rational forces w_k = 0, so this never fires;
            # kept for completeness of the case split
            return ratio, HOLDS_WITH_EQUALITY
        return ratio, VIOLATED
    if ratio < K5_LOWER - tolerance or ratio > K5_UPPER + tolerance:
        return ratio, VIOLATED
    if abs(ratio - K5_LOWER) <= tolerance or abs(ratio - K5_UPPER) <= tolerance:
        return ratio, HOLDS_WITH_EQUALITY
    return ratio, HOLDS


def _check_rows(config: Configuration, tolerance: float, config_id: int):
    classify = _classify_k4 if config.n == 4 else _classify_k5
    pairs = _pair_weights(config.points)
    w_k = 0
    for key in sorted(pairs):  # (i, j), i < j order: matches total_weight
        w_k += pairs[key]
    rows = []
    for cycle in enumerate_cycles(config.n):
        w_e = _cycle_weight_from(pairs, cycle)
        ratio, verdict = classify(w_e, w_k, tolerance, config.mode)
        rows.append(CycleRow(config_id, cycle, w_e, w_k - w_e, w_k, ratio, verdict))
    return rows


def _aggregate(n, mode, tolerance, trials, all_rows, keep_all: bool) -> BoundReport:
    checks = len(all_rows)
    violations = sum(1 for r in all_rows if r.verdict == VIOLATED)
    degenerate = sum(1 for r in all_rows if r.verdict == DEGENERATE)
    equalities = sum(1 for r in all_rows if r.verdict == HOLDS_WITH_EQUALITY)
    ratios = [r.ratio for r in all_rows if r.ratio is not None]
    min_ratio = min(ratios) if ratios else None
    max_ratio = max(ratios) if ratios else None
    if keep_all:
        kept = tuple(all_rows)
    else:
        kept = tuple(r for r in all_rows if r.verdict in (VIOLATED, DEGENERATE))
    return BoundReport(
        n, mode, tolerance, trials, checks, violations, degenerate, equalities,
        min_ratio, max_ratio, kept,
    )


def _require_tolerance(tolerance):
    if not tolerance > 0:
        raise UsageError("tolerance must be positive")


def check_k4_bounds(config: Configuration, tolerance: float = REL_TOL_DERIVED) -> BoundReport:
    """Check every cycle of a 4-point configuration against the K4 bounds."""
    _require_tolerance(tolerance)
    if config.n != 4:
        raise UsageError("K4 bounds need exactly 4 points")
    rows = _check_rows(config, tolerance, 0)
    return _aggregate(4, config.mode, tolerance, 1, rows, keep_all=True)


def check_k5_bounds(config: Configuration, tolerance: float = REL_TOL_DERIVED) -> BoundReport:
    """Check every cycle of a 5-point configuration against the K5 bounds."""
    _require_tolerance(tolerance)
    if config.n != 5:
        raise UsageError("K5 bounds need exactly 5 points")
    rows = _check_rows(config, tolerance, 0)
    return _aggregate(5, config.mode, tolerance, 1, rows, keep_all=True)


def duality_check(config: Configuration, tolerance: float = 1e-12) -> DualityReport:
    """Verify ratio(E) + ratio(complement E) = 1 for all 12 cycles on 5 points.

    Also flags where each cycle sits against the two K5 bounds and
    checks the exchange symmetry: E attains the lower bound exactly
    when its complement attains the upper one.  The default tolerance
    is tight (1e-12) because each ratio is a handful of float ops.
    """
    _require_tolerance(tolerance)
    if config.n != 5:
        raise UsageError("duality needs exactly 5 points")
    pairs = _pair_weights(config.points)
    w_k = 0
    for key in sorted(pairs):
        w_k += pairs[key]
    if w_k == 0:
        raise DegenerateError("all points coincide; ratios are undefined")
    rows = []
    ok = True
    for cycle in enumerate_cycles(5):
        comp = complement_cycle(cycle)
        r_e = _cycle_weight_from(pairs, cycle) / w_k
        r_d = _cycle_weight_from(pairs, comp) / w_k
        residual = r_e + r_d - 1
        if config.mode == RATIONAL:
            if residual != 0:
                ok = False
            lo_e = _attains(r_e, "lower", 0, RATIONAL)
            hi_e = _attains(r_e, "upper", 0, RATIONAL)
            lo_d = _attains(r_d, "lower", 0, RATIONAL)
            hi_d = _attains(r_d, "upper", 0, RATIONAL)
        else:
            if abs(residual) > tolerance:
                ok = False
            lo_e = _attains(r_e, "lower", tolerance, FLOAT)
            hi_e = _attains(r_e, "upper", tolerance, FLOAT)
            lo_d = _attains(r_d, "lower", tolerance, FLOAT)
            hi_d = _attains(r_d, "upper", tolerance, FLOAT)
        # bound exchange: E at the bottom iff its complement at the top
        if lo_e != hi_d or hi_e != lo_d:
            ok = False
        rows.append(DualityRow(cycle, comp, r_e, r_d, residual, lo_e, hi_e))
    return DualityReport(config.mode, tolerance, HOLDS if ok else VIOLATED, tuple(rows))


def _attains(ratio, which: str, tolerance, mode: str) -> bool:
    if mode == RATIONAL:
        # exact attainment of an irrational bound is impossible for
        # rational ratios; report strict equality of the squared form
        t = 10 * ratio - 5
        return t * t == 5 and (t < 0) == (which == "lower")
    bound = K5_LOWER if which == "lower" else K5_UPPER
    return abs(ratio - bound) <= tolerance


def fuzz(
    seed: int,
    trials: int,
    n: int,
    dim: int = 2,
    tolerance: float = REL_TOL_DERIVED,
    mode: str = FLOAT,
) -> BoundReport:
    """Check the K4 or K5 bounds on ``trials`` random configurations.

    Trial i draws its configuration from the derived seed
    mix64(seed + i); any trial can be replayed alone with that seed.
    The report keeps only violated/degenerate rows.
    """
    _require_tolerance(tolerance)
    if trials < 1:
        raise UsageError("trials must be at least 1")
    if n not in (4, 5):
        raise UsageError("bound checks exist for n = 4 and n = 5 only")
    if mode not in MODES:
        raise UsageError(f"unknown scalar mode {mode!r}")
    all_rows = []
    for i in range(trials):
        config = random_config(mix64((seed + i) & MASK64), n, dim, mode)
        all_rows.extend(_check_rows(config, tolerance, i))
    return _aggregate(n, mode, tolerance, trials, all_rows, keep_all=False)
