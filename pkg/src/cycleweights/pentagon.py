"""Midpoint iteration on five points.

Fix a Hamiltonian cycle E on a 5-point configuration and let D be its
complement cycle.  Arrange the points in D-cycle order; each iteration
step replaces them by the midpoints of consecutive pairs.  Writing d_n
and e_n for the D-type weight (consecutive pairs) and E-type weight
(pairs two apart) at level n, the step satisfies exact coupling laws

    (A)  4 d_{n+1} = e_n
    (B)  d_n + 4 e_{n+1} = 3 e_n

which combine into a two-term linear recurrence for e alone

    (C)  e_{n+2} = (12/16) e_{n+1} - (1/16) e_n.

Level 1 is the starting configuration, so d_1 is the weight of the
chosen cycle's complement D and e_1 the weight of E itself.  Law (B)
at one level is equivalent to summing the four-point relation over the
five quadruples of consecutive E-cycle vertices; see
:func:`quadruple_decomposition`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .checks import relative_residual
from .cycles import Cycle, complement_cycle, complement_weight, cycle_weight, total_weight
from .errors import DegenerateError, UsageError
from .geometry import Configuration, RATIONAL, Scalar, midpoint, squared_distance
from .quadrilateral import IdentityTerms, QuadLabeling, identity_terms


@dataclass(frozen=True)
class IterationState:
    """One level: five points in D-cycle order plus both weights.

    ``d`` sums consecutive pairs of ``points`` (the current D-type
    weight), ``e`` sums pairs two apart (the current E-type weight).
    """

    level: int
    points: tuple
    d: Scalar
    e: Scalar


@dataclass(frozen=True)
class Trace:
    """States of levels 1..steps+1 and the residuals of laws (A), (B), (C).

    ``res_a[i]`` anchors law (A) at level i+1 (4 d_{i+2} - e_{i+1} in
    1-based level terms), likewise ``res_b``; ``res_c`` needs three
    consecutive levels so it has one entry fewer.
    """

    mode: str
    states: tuple
    res_a: tuple
    res_b: tuple
    res_c: tuple

    @property
    def levels(self) -> int:
        return len(self.states)

    def e_values(self) -> tuple:
        return tuple(s.e for s in self.states)

    def d_values(self) -> tuple:
        return tuple(s.d for s in self.states)

    def max_relative_residual(self) -> float:
        """Worst residual across all three law families, term-scaled."""
        d = self.d_values()
        e = self.e_values()
        worst = 0.0
        for i, r in enumerate(self.res_a):
            worst = max(worst, float(relative_residual(r, 4 * d[i + 1], e[i])))
        for i, r in enumerate(self.res_b):
            worst = max(worst, float(relative_residual(r, d[i], 4 * e[i + 1], 3 * e[i])))
        for i, r in enumerate(self.res_c):
            worst = max(
                worst,
                float(relative_residual(r, e[i + 2], 0.75 * float(e[i + 1]), 0.0625 * float(e[i]))),
            )
        return worst


def _weights(points) -> tuple:
    d = 0
    e = 0
    for k in range(5):
        d += squared_distance(points[k], points[(k + 1) % 5])
        e += squared_distance(points[k], points[(k + 2) % 5])
    return d, e


def init_state(config: Configuration, e_cycle: Cycle) -> IterationState:
    """Level-1 state for a configuration and a chosen E-cycle.

    Points are reordered along the complement cycle of ``e_cycle``, so
    consecutive entries realize D edges and entries two apart realize E
    edges.  A zero-total-weight configuration has nothing to iterate on.
    """
    if config.n != 5:
        raise UsageError("midpoint iteration needs exactly 5 points")
    if e_cycle.n != 5:
        raise UsageError("cycle size does not match configuration")
    if total_weight(config) == 0:
        raise DegenerateError("all points coincide; total weight is zero")
    d_cycle = complement_cycle(e_cycle)
    points = tuple(config.points[v] for v in d_cycle.order)
    d = complement_weight(config, e_cycle)
    e = cycle_weight(config, e_cycle)
    return IterationState(1, points, d, e)


def step(state: IterationState) -> IterationState:
    """Replace the five points by midpoints of consecutive pairs."""
    pts = state.points
    mids = tuple(midpoint(pts[k], pts[(k + 1) % 5]) for k in range(5))
    d, e = _weights(mids)
    return IterationState(state.level + 1, mids, d, e)


def trace(config: Configuration, e_cycle: Cycle, steps: int) -> Trace:
    """Run ``steps`` iterations and record all residuals of laws (A)-(C)."""
    if not 1 <= steps <= 200:
        raise UsageError("steps must be between 1 and 200")
    states = [init_state(config, e_cycle)]
    for _ in range(steps):
        states.append(step(states[-1]))
    d = [s.d for s in states]
    e = [s.e for s in states]
    if config.mode == RATIONAL:
        c1, c2 = Fraction(12, 16), Fraction(1, 16)
    else:
        c1, c2 = 0.75, 0.0625  # both exact binary64 values
    res_a = tuple(4 * d[i + 1] - e[i] for i in range(steps))
    res_b = tuple(d[i] + 4 * e[i + 1] - 3 * e[i] for i in range(steps))
    res_c = tuple(e[i + 2] - c1 * e[i + 1] + c2 * e[i] for i in range(steps - 1))
    return Trace(config.mode, tuple(states), res_a, res_b, res_c)


def quadruple_decomposition(config: Configuration, e_cycle: Cycle) -> tuple:
    """Four-point relation terms for the five consecutive E-cycle quadruples.

    Window i takes vertices (o_i, o_{i+1}, o_{i+2}, o_{i+3}) of the
    E-cycle order with pairing 0, so the window's 4-cycle runs along E
    edges and its diagonals are E edges two apart (i.e. D edges of the
    iteration).  Summing the five relations: each diagonal-midpoint
    term contributes a level-2 E edge, giving

        sum(4 r^2) = 4 e_2,   sum(l5 + l6) = 2 d_1,   sum(rhs) = 3 e_1 + d_1

    whose combination is exactly law (B) at level 1.
    """
    if config.n != 5:
        raise UsageError("the decomposition needs exactly 5 points")
    if e_cycle.n != 5:
        raise UsageError("cycle size does not match configuration")
    o = e_cycle.order
    out = []
    for i in range(5):
        window = tuple(config.points[o[(i + k) % 5]] for k in range(4))
        out.append(identity_terms(QuadLabeling(window, 0, config.mode)))
    return tuple(out)
