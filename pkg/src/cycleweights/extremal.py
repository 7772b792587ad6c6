"""Search for extremal cycle-weight ratios over point configurations.

The ratio of interest is w(E)/w(K_n) for the identity cycle
(0, 1, ..., n-1); by vertex relabeling every cycle's ratio range is
the same, so optimizing this one objective explores them all.  The
ratio is scale- and translation-invariant, which makes the unit-weight
normalized configurations a compact search space.

The optimizer is a deterministic multi-start coordinate pattern search:
from a seeded random start (normalized), sweep the coordinates in
order, trying +h then -h on each (renormalizing the candidate), and
accept the first strict improvement; after a sweep with no improvement
halve h.  Start at h = 0.25, stop when h < 1e-9 or the sweep budget is
spent.  No randomness beyond the seeded starts, so results are
reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import K5_LOWER, K5_UPPER
from .cycles import Cycle, canonicalize, cycle_weight, enumerate_cycles, total_weight
from .errors import DegenerateError, UsageError
from .geometry import Configuration, FLOAT, normalized_points, random_config
from .prng import MASK64, mix64

MAXIMIZE = "maximize"
MINIMIZE = "minimize"

_H_INITIAL = 0.25
_H_FLOOR = 1e-9

# proven ratio intervals, by n; elsewhere the search is exploratory
PROVEN_INTERVALS = {4: (0.5, 1.0), 5: (K5_LOWER, K5_UPPER)}


@dataclass(frozen=True)
class OptimizationResult:
    """Outcome of one multi-start search.

    ``value`` is the best objective found; ``history`` lists the
    accepted values of the winning restart in order.  ``bound`` is the
    proven interval for this n (None when there is none) and
    ``within_bounds`` allows a 1e-9 guard band around it.
    """

    n: int
    dim: int
    objective: str
    value: float
    config: Configuration
    cycle: Cycle
    restarts: int
    sweeps: int
    best_restart: int
    bound: tuple
    within_bounds: bool
    history: tuple


@dataclass(frozen=True)
class ConjectureRow:
    """Min/max search outcome for one n, with consistency checks.

    ``min_cycle``/``max_cycle`` are the extreme cycles when *all*
    cycles are enumerated on the witness configurations; their values
    can only improve on the identity-cycle search value (relabeling
    symmetry), never beat it by much.
    """

    n: int
    minimum: OptimizationResult
    maximum: OptimizationResult
    proven: tuple
    status: str
    min_cycle: Cycle
    min_cycle_value: float
    max_cycle: Cycle
    max_cycle_value: float


def ratio(config: Configuration, cycle: Cycle) -> float:
    """w(cycle)/w(total); degenerate when the total weight is zero."""
    w_k = total_weight(config)
    if w_k == 0:
        raise DegenerateError("all points coincide; ratio is undefined")
    return cycle_weight(config, cycle) / w_k


def _sq(p, q) -> float:
    s = 0.0
    for a, b in zip(p, q):
        d = a - b
        s += d * d
    return s


def _identity_ratio(pts) -> float:
    n = len(pts)
    w_e = 0.0
    for k in range(n):
        w_e += _sq(pts[k], pts[(k + 1) % n])
    w_k = 0.0
    for i in range(n):
        pi = pts[i]
        for j in range(i + 1, n):
            w_k += _sq(pi, pts[j])
    return w_e / w_k


def optimize(
    seed: int,
    n: int,
    dim: int = 2,
    objective: str = MAXIMIZE,
    restarts: int = 20,
    budget: int = 500,
) -> OptimizationResult:
    """Multi-start pattern search for the extremal identity-cycle ratio.

    Restart r starts from random_config(mix64(seed + r), n, dim),
    normalized.  Ties between restarts keep the earliest one.
    """
    if objective not in (MAXIMIZE, MINIMIZE):
        raise UsageError("objective must be 'maximize' or 'minimize'")
    if not 4 <= n <= 7:
        raise UsageError("optimization supports 4 <= n <= 7")
    if dim not in (2, 3):
        raise UsageError("dimension must be 2 or 3")
    if restarts < 1:
        raise UsageError("restarts must be at least 1")
    if budget < 1:
        raise UsageError("sweep budget must be at least 1")
    maximize = objective == MAXIMIZE
    best = None
    total_sweeps = 0
    for r in range(restarts):
        start = random_config(mix64((seed + r) & MASK64), n, dim, FLOAT)
        pts = normalized_points(start.points)
        if pts is None:  # unreachable for random draws, but stay safe
            continue
        pts = [list(p) for p in pts]
        value = _identity_ratio(pts)
        history = [value]
        h = _H_INITIAL
        sweeps = 0
        while h >= _H_FLOOR and sweeps < budget:
            sweeps += 1
            improved = False
            for i in range(n):
                for j in range(dim):
                    for delta in (h, -h):
                        cand = [row[:] for row in pts]
                        cand[i][j] += delta
                        norm = normalized_points(cand)
                        if norm is None:
                            continue
                        cand = [list(p) for p in norm]
                        v = _identity_ratio(cand)
                        if (v > value) if maximize else (v < value):
                            pts, value = cand, v
                            history.append(v)
                            improved = True
                            break
            if not improved:
                h *= 0.5
        total_sweeps += sweeps
        better = best is None or (
            (value > best[1]) if maximize else (value < best[1])
        )
        if better:
            best = (r, value, pts, tuple(history), sweeps)
    best_restart, value, pts, history, _ = best
    config = Configuration(tuple(tuple(p) for p in pts), FLOAT)
    bound = PROVEN_INTERVALS.get(n)
    within = None
    if bound is not None:
        within = bound[0] - 1e-9 <= value <= bound[1] + 1e-9
    return OptimizationResult(
        n, dim, objective, value, config, canonicalize(range(n)),
        restarts, total_sweeps, best_restart, bound, within, history,
    )


def conjecture_table(
    seed: int,
    n_values=(4, 5, 6, 7),
    dim: int = 2,
    restarts: int = 20,
    budget: int = 500,
) -> tuple:
    """Observed extremal ratios per n, next to the proven intervals.

    For each witness configuration the table also reports the true
    extreme cycle over full enumeration, as a relabeling-consistency
    check on the identity-cycle search.
    """
    rows = []
    for n in n_values:
        if not 4 <= n <= 7:
            raise UsageError("conjecture table supports 4 <= n <= 7")
        lo = optimize(seed, n, dim, MINIMIZE, restarts, budget)
        hi = optimize(seed, n, dim, MAXIMIZE, restarts, budget)
        min_cy, min_val = _extreme_cycle(lo.config, minimize=True)
        max_cy, max_val = _extreme_cycle(hi.config, minimize=False)
        proven = PROVEN_INTERVALS.get(n)
        rows.append(
            ConjectureRow(
                n, lo, hi, proven,
                "proven" if proven is not None else "conjectured",
                min_cy, min_val, max_cy, max_val,
            )
        )
    return tuple(rows)


def _extreme_cycle(config: Configuration, minimize: bool):
    w_k = total_weight(config)
    best_cycle = None
    best_value = None
    for cycle in enumerate_cycles(config.n):
        v = cycle_weight(config, cycle) / w_k
        if best_value is None or ((v < best_value) if minimize else (v > best_value)):
            best_cycle, best_value = cycle, v
    return best_cycle, best_value
