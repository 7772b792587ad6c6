"""Points, configurations, and squared-distance weights.

A point is a plain tuple of scalars.  A configuration is an ordered,
immutable collection of points sharing one dimension (2 or 3) and one
scalar mode: mode ``"float"`` computes in binary64, mode ``"rational"``
computes in :class:`fractions.Fraction` so algebraic identities can be
checked with zero tolerance.

The edge weight between two points is the *squared* Euclidean distance,
i.e. the sum of squared coordinate differences — no square roots appear
anywhere in the weight arithmetic, which is what makes the exact mode
possible.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import DegenerateError, UsageError
from .prng import SplitMix64

FLOAT = "float"
RATIONAL = "rational"
MODES = (FLOAT, RATIONAL)

Scalar = Union[float, Fraction]
Point = tuple


def _coerce_scalar(x, mode: str) -> Scalar:
    if mode == RATIONAL:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, float):
            if not math.isfinite(x):
                raise UsageError("coordinates must be finite")
            # binary floats are dyadic rationals, so this is lossless
            return Fraction(x)
        raise UsageError(f"cannot use {type(x).__name__} as a rational coordinate")
    v = float(x)
    if not math.isfinite(v):
        raise UsageError("coordinates must be finite")
    return v


def _coerce_point(p, mode: str) -> Point:
    return tuple(_coerce_scalar(x, mode) for x in p)


def squared_distance(p: Point, q: Point) -> Scalar:
    """Edge weight between two points: sum of squared coordinate gaps."""
    if len(p) != len(q):
        raise UsageError(f"dimension mismatch: {len(p)} vs {len(q)}")
    total = 0
    for a, b in zip(p, q):
        d = a - b
        total += d * d
    return total


def midpoint(p: Point, q: Point) -> Point:
    """Coordinate-wise mean; exact in rational mode."""
    if len(p) != len(q):
        raise UsageError(f"dimension mismatch: {len(p)} vs {len(q)}")
    return tuple((a + b) / 2 for a, b in zip(p, q))


def pairwise_weight(points) -> Scalar:
    """Total squared-distance weight over all unordered point pairs.

    Pairs are accumulated in (i, j), i < j order; every caller that
    needs bit-identical totals relies on that order.
    """
    total = 0
    n = len(points)
    for i in range(n):
        pi = points[i]
        for j in range(i + 1, n):
            total += squared_distance(pi, points[j])
    return total


@dataclass(frozen=True)
class Configuration:
    """Ordered, immutable point set with one dimension and one scalar mode.

    ``dim`` is derived from the points; mixing dimensions or passing
    fewer than three points is a usage error.
    """

    points: tuple
    mode: str = FLOAT
    dim: int = field(init=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise UsageError(f"unknown scalar mode {self.mode!r}")
        pts = tuple(_coerce_point(p, self.mode) for p in self.points)
        if len(pts) < 3:
            raise UsageError("a configuration needs at least 3 points")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise UsageError("all points must share one dimension")
        dim = dims.pop()
        if dim not in (2, 3):
            raise UsageError("dimension must be 2 or 3")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "dim", dim)

    @property
    def n(self) -> int:
        return len(self.points)


def random_config(seed: int, n: int, dim: int = 2, mode: str = FLOAT) -> Configuration:
    """n points drawn uniformly from the unit square/cube.

    Coordinates come off one SplitMix64 stream in point-major order, so
    a given seed pins the configuration exactly.  Rational mode keeps
    the same 53-bit draws as dyadic fractions; both modes therefore
    describe the identical point set.
    """
    if n < 3:
        raise UsageError("n must be at least 3")
    if dim not in (2, 3):
        raise UsageError("dimension must be 2 or 3")
    if mode not in MODES:
        raise UsageError(f"unknown scalar mode {mode!r}")
    rng = SplitMix64(seed)
    pts = []
    for _ in range(n):
        if mode == RATIONAL:
            coords = tuple(Fraction(rng.next_u64() >> 11, 1 << 53) for _ in range(dim))
        else:
            coords = tuple(rng.next_unit() for _ in range(dim))
        pts.append(coords)
    return Configuration(tuple(pts), mode)


def regular_polygon(n: int, circumradius: float = 1.0) -> Configuration:
    """Vertices of a regular n-gon on a circle about the origin (float mode)."""
    if n < 3:
        raise UsageError("n must be at least 3")
    r = float(circumradius)
    if not (math.isfinite(r) and r > 0):
        raise UsageError("circumradius must be positive and finite")
    pts = tuple(
        (r * math.cos(2.0 * math.pi * k / n), r * math.sin(2.0 * math.pi * k / n))
        for k in range(n)
    )
    return Configuration(pts, FLOAT)


def normalized_points(points):
    """Center at the origin and scale to unit total weight; None if degenerate.

    Raw-tuple variant shared with the optimizer's inner loop.
    """
    n = len(points)
    dim = len(points[0])
    centroid = [0.0] * dim
    for p in points:
        for j in range(dim):
            centroid[j] += p[j]
    for j in range(dim):
        centroid[j] /= n
    shifted = [tuple(p[j] - centroid[j] for j in range(dim)) for p in points]
    w = pairwise_weight(shifted)
    if w == 0.0:
        return None
    s = 1.0 / math.sqrt(w)
    return tuple(tuple(x * s for x in p) for p in shifted)


def normalize(config: Configuration) -> Configuration:
    """Translate the centroid to the origin and rescale so the total
    pairwise weight is 1.

    Only defined in float mode — the scale factor is an inverse square
    root, which rational mode cannot represent.  All cycle-weight ratios
    are invariant under this map.
    """
    if config.mode != FLOAT:
        raise UsageError("normalize is only available in float mode")
    pts = normalized_points(config.points)
    if pts is None:
        raise DegenerateError("all points coincide; total weight is zero")
    return Configuration(pts, FLOAT)


# --- point-file format ----------------------------------------------------
#
#   # optional comment / blank lines anywhere
#   points <n> dim <d> mode <float|rational>
#   <coordinate row> x n
#
# Rows hold d whitespace-separated tokens; a token is any decimal literal
# (float mode) or an integer/fraction/decimal literal (rational mode).

_HEADER_RE = re.compile(r"^points\s+(\d+)\s+dim\s+(\d+)\s+mode\s+(\w+)$")


def parse_points(text: str) -> Configuration:
    """Parse the point-file format into a Configuration."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise UsageError("empty point file")
    m = _HEADER_RE.match(lines[0])
    if not m:
        raise UsageError(f"bad header line: {lines[0]!r}")
    n, dim, mode = int(m.group(1)), int(m.group(2)), m.group(3)
    if mode not in MODES:
        raise UsageError(f"unknown scalar mode {mode!r}")
    rows = lines[1:]
    if len(rows) != n:
        raise UsageError(f"expected {n} coordinate rows, found {len(rows)}")
    pts = []
    for row in rows:
        tokens = row.split()
        if len(tokens) != dim:
            raise UsageError(f"expected {dim} coordinates per row, got {row!r}")
        pts.append(tuple(_parse_token(t, mode) for t in tokens))
    config = Configuration(tuple(pts), mode)
    if config.dim != dim:
        raise UsageError("header dimension does not match rows")
    return config


def _parse_token(token: str, mode: str) -> Scalar:
    try:
        if mode == RATIONAL:
            return Fraction(token)
        v = float(token)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad coordinate token {token!r}") from None
    if not math.isfinite(v):
        raise UsageError(f"bad coordinate token {token!r}")
    return v


def format_points(config: Configuration) -> str:
    """Render a Configuration in the point-file format (round-trips exactly)."""
    out = [f"points {config.n} dim {config.dim} mode {config.mode}"]
    for p in config.points:
        out.append(" ".join(_format_scalar(x) for x in p))
    return "\n".join(out) + "\n"


def _format_scalar(x: Scalar) -> str:
    # repr of a float is its shortest exact round-trip form
    return str(x) if isinstance(x, Fraction) else repr(x)
