"""The rational sequence governing the midpoint iteration, exactly.

    a_0 = 0,  a_1 = 1,  a_{n+2} = (12/16) a_{n+1} - (1/16) a_n

Everything here runs in fractions.Fraction: the sequence's qualitative
facts (positivity, monotone decay, ratio bounds) involve comparisons
against the irrational (3 + sqrt(5))/8, which exact arithmetic settles
by squaring — no tolerance ever enters a verdict.

The same coefficients have the closed form a_n = y_n / 8^(n-1) where
(3 + sqrt(5))^n = x_n + y_n sqrt(5) with integer x_n, y_n; it is
computed here by binary powering in Z[sqrt(5)] and serves as an
algorithm-independent cross-check on the recurrence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .checks import HOLDS, VIOLATED
from .errors import UsageError
from .geometry import RATIONAL

RATIO_LIMIT = (3 + math.sqrt(5)) / 8  # limit of a_{n+1}/a_n
BOUND_LIMIT = (3 + math.sqrt(5)) / 2  # limit of B(n) = 3 - a_{n-1}/(4 a_n)

_C1 = Fraction(12, 16)
_C2 = Fraction(1, 16)


@dataclass(frozen=True)
class SequenceTable:
    """Terms a_0..a_N with consecutive ratios and bound values B(n).

    ``ratios[k]`` is a_{k+2}/a_{k+1} (defined from a_1 on);
    ``bound_values[k]`` is B(k+2) = 3 - a_{k+1}/(4 a_{k+2}).  Use the
    accessors to avoid the offsets.
    """

    terms: tuple
    ratios: tuple
    bound_values: tuple

    @property
    def n_max(self) -> int:
        return len(self.terms) - 1

    def term(self, n: int) -> Fraction:
        return self.terms[n]

    def ratio(self, n: int) -> Fraction:
        """a_{n+1}/a_n for n >= 1."""
        if n < 1:
            raise UsageError("ratio is defined for n >= 1")
        return self.ratios[n - 1]

    def bound(self, n: int) -> Fraction:
        """B(n) = 3 - a_{n-1}/(4 a_n) for n >= 2."""
        if n < 2:
            raise UsageError("the bound expression needs n >= 2")
        return self.bound_values[n - 2]


def sequence_table(n_max: int) -> SequenceTable:
    """Exact table of a_0..a_{n_max} (n_max >= 2)."""
    if n_max < 2:
        raise UsageError("n_max must be at least 2")
    terms = [Fraction(0), Fraction(1)]
    while len(terms) <= n_max:
        terms.append(_C1 * terms[-1] - _C2 * terms[-2])
    ratios = tuple(terms[k + 1] / terms[k] for k in range(1, n_max))
    bounds = tuple(3 - terms[k - 1] / (4 * terms[k]) for k in range(2, n_max + 1))
    return SequenceTable(tuple(terms), ratios, bounds)


def closed_form_term(n: int) -> Fraction:
    """a_n via the Z[sqrt(5)] closed form; independent of the recurrence.

    With (3 + sqrt(5))^n = x + y sqrt(5), a_n = y / 8^(n-1).
    """
    if n < 0:
        raise UsageError("n must be nonnegative")
    if n == 0:
        return Fraction(0)
    # binary powering of (3 + 1*sqrt(5)) in Z[sqrt(5)]
    bx, by = 3, 1
    x, y = 1, 0
    k = n
    while k:
        if k & 1:
            x, y = x * bx + 5 * y * by, x * by + y * bx
        bx, by = bx * bx + 5 * by * by, 2 * bx * by
        k >>= 1
    return Fraction(y, 8 ** (n - 1))


def bound_value(n: int) -> Fraction:
    """B(n) = 3 - a_{n-1}/(4 a_n), exact, for n >= 2."""
    if n < 2:
        raise UsageError("the bound expression needs n >= 2")
    return sequence_table(n).bound(n)


@dataclass(frozen=True)
class SequencePropertyReport:
    """Exact verdicts for the sequence's qualitative properties up to N.

    ``ratio_above_limit`` certifies a_{n+1}/a_n > (3 + sqrt(5))/8 using
    the squaring transform: with s = 8 a_{n+1} - 3 a_n the claim is
    equivalent to s > 0 and s^2 > 5 a_n^2, a pure rational comparison.
    ``final_ratio_gap`` reports |a_{N+1}/a_N - limit| in float for
    display.
    """

    n_checked: int
    positive_decreasing: bool
    ratio_above_limit: bool
    ratio_nonincreasing: bool
    final_ratio_gap: float
    verdict: str


def check_sequence_properties(n_max: int) -> SequencePropertyReport:
    """Exactly verify positivity/decay/ratio facts for n = 1..n_max."""
    if n_max < 3:
        raise UsageError("n_max must be at least 3")
    a = sequence_table(n_max + 1).terms
    positive_decreasing = all(
        a[n] > 0 and a[n + 1] < a[n] for n in range(1, n_max + 1)
    )
    ratio_above = True
    for n in range(1, n_max + 1):
        s = 8 * a[n + 1] - 3 * a[n]
        if not (s > 0 and s * s > 5 * a[n] * a[n]):
            ratio_above = False
            break
    nonincreasing = all(
        a[n + 2] * a[n] <= a[n + 1] * a[n + 1] for n in range(1, n_max)
    )
    gap = abs(float(a[n_max + 1] / a[n_max]) - RATIO_LIMIT)
    ok = positive_decreasing and ratio_above and nonincreasing
    return SequencePropertyReport(
        n_max, positive_decreasing, ratio_above, nonincreasing, gap,
        HOLDS if ok else VIOLATED,
    )


def representation_residual(tr, n: int):
    """Residual of e_n = a_{n-1} e_2 - (a_{n-2}/16) e_1 against a trace.

    ``tr`` is a pentagon iteration :class:`~cycleweights.pentagon.Trace`;
    levels are 1-based and n must satisfy 2 <= n <= tr.levels.  In
    rational mode the residual is exactly zero; in float mode the
    coefficients are rounded to float once, so the residual stays at
    rounding scale.
    """
    if n < 2 or n > tr.levels:
        raise UsageError("n must satisfy 2 <= n <= trace levels")
    e = tr.e_values()
    table = sequence_table(max(n - 1, 2)).terms
    coeff_2 = table[n - 1]
    coeff_1 = table[n - 2] / 16
    if tr.mode == RATIONAL:
        return e[n - 1] - (coeff_2 * e[1] - coeff_1 * e[0])
    return e[n - 1] - (float(coeff_2) * e[1] - float(coeff_1) * e[0])
