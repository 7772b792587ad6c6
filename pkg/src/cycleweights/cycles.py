"""Hamiltonian cycles on the complete graph over a configuration.

A cycle visits every vertex exactly once; vertices are configuration
indices.  Cycles are stored in a canonical form so each of the
(n-1)!/2 distinct cycles has exactly one representation: the sequence
starts at vertex 0 and its second entry is smaller than its last
(fixing the traversal direction).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .geometry import Configuration, Scalar, pairwise_weight, squared_distance
from .errors import UsageError


@dataclass(frozen=True)
class Cycle:
    """Canonical vertex order of a Hamiltonian cycle.

    Construct via :func:`canonicalize` unless the sequence is already
    canonical; the constructor rejects anything else.
    """

    order: tuple

    def __post_init__(self):
        order = tuple(int(v) for v in self.order)
        object.__setattr__(self, "order", order)
        n = len(order)
        if n < 3:
            raise UsageError("a cycle needs at least 3 vertices")
        if sorted(order) != list(range(n)):
            raise UsageError("cycle must be a permutation of 0..n-1")
        if order[0] != 0 or order[1] > order[-1]:
            raise UsageError(
                "vertex sequence is not canonical; build it with canonicalize()"
            )

    @property
    def n(self) -> int:
        return len(self.order)

    def edges(self) -> frozenset:
        """The n undirected edges, each as a sorted index pair."""
        o = self.order
        n = len(o)
        return frozenset(
            (o[k], o[(k + 1) % n]) if o[k] < o[(k + 1) % n] else (o[(k + 1) % n], o[k])
            for k in range(n)
        )

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.order)


def canonicalize(vertex_sequence) -> Cycle:
    """Rotate/reflect a vertex sequence into the canonical representative."""
    seq = tuple(int(v) for v in vertex_sequence)
    n = len(seq)
    if n < 3 or sorted(seq) != list(range(n)):
        raise UsageError("input must be a permutation of 0..n-1 with n >= 3")
    i = seq.index(0)
    rot = seq[i:] + seq[:i]
    if rot[1] > rot[-1]:
        rot = rot[:1] + rot[:0:-1]
    return Cycle(rot)


def enumerate_cycles(n: int) -> tuple:
    """All (n-1)!/2 distinct Hamiltonian cycles on n vertices.

    Deterministic order: lexicographic in the canonical vertex sequence.
    Capped at n = 10 (181440 cycles) to keep full enumeration sane.
    """
    if not 3 <= n <= 10:
        raise UsageError("cycle enumeration supports 3 <= n <= 10")
    out = []
    for perm in itertools.permutations(range(1, n)):
        if perm[0] < perm[-1]:
            out.append(Cycle((0,) + perm))
    return tuple(out)


def cycle_weight(config: Configuration, cycle: Cycle) -> Scalar:
    """Sum of squared distances along the cycle's edges, in traversal order."""
    if cycle.n != config.n:
        raise UsageError("cycle size does not match configuration")
    pts = config.points
    o = cycle.order
    n = len(o)
    total = 0
    for k in range(n):
        total += squared_distance(pts[o[k]], pts[o[(k + 1) % n]])
    return total


def total_weight(config: Configuration) -> Scalar:
    """Weight of the whole complete graph: every unordered pair once."""
    return pairwise_weight(config.points)


def complement_weight(config: Configuration, cycle: Cycle) -> Scalar:
    """Weight of all edges *not* on the cycle (total minus cycle weight)."""
    if cycle.n != config.n:
        raise UsageError("cycle size does not match configuration")
    return total_weight(config) - cycle_weight(config, cycle)


def complement_cycle(cycle: Cycle) -> Cycle:
    """The Hamiltonian cycle formed by the complement edges; n = 5 only.

    K5 splits into a 5-cycle and its complement, which is again a
    5-cycle (the pentagram of the original).  No other n has this
    property, so anything else is rejected.
    """
    if cycle.n != 5:
        raise UsageError("complement of a Hamiltonian cycle is a cycle only for n = 5")
    on_cycle = cycle.edges()
    nbrs = {v: [] for v in range(5)}
    for i in range(5):
        for j in range(i + 1, 5):
            if (i, j) not in on_cycle:
                nbrs[i].append(j)
                nbrs[j].append(i)
    seq = [0]
    prev, cur = None, 0
    while len(seq) < 5:
        nxt = min(v for v in nbrs[cur] if v != prev)
        seq.append(nxt)
        prev, cur = cur, nxt
    return canonicalize(seq)
