"""Planar primitives: points, point clouds, smallest enclosing circles.

Every filtration value in this package is the radius of the smallest circle
enclosing one, two or three dots, so the tie-breaking and tolerance rules for
that computation are pinned down here, once.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

# Relative tolerance on the law-of-cosines sign used to classify the widest
# angle of a triangle.  Exactly-right triangles take the half-longest-side
# branch; both branches agree there, so the tie is harmless.
RIGHT_ANGLE_RTOL = 1e-9


class Point2(NamedTuple):
    """A planar point with finite coordinates."""

    x: float
    y: float


def _as_point(p: Sequence[float]) -> Point2:
    q = Point2(float(p[0]), float(p[1]))
    if not (math.isfinite(q.x) and math.isfinite(q.y)):
        raise ValueError(f"non-finite coordinate in point {p!r}")
    return q


@dataclass(frozen=True)
class PointCloud:
    """An ordered, duplicate-free list of dots.

    Exact coincident duplicates are rejected; ingest raw data through
    :func:`dedupe`, which drops them (keeping first occurrences) instead.
    """

    points: tuple[Point2, ...]
    provenance: str | None = None

    def __post_init__(self) -> None:
        pts = tuple(_as_point(p) for p in self.points)
        if not pts:
            raise ValueError("a point cloud needs at least one point")
        if len(set(pts)) != len(pts):
            raise ValueError("coincident points; ingest raw data via dedupe()")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point2]:
        return iter(self.points)

    def __getitem__(self, i: int) -> Point2:
        return self.points[i]

    @cached_property
    def as_array(self) -> np.ndarray:
        """The points as a read-only (n, 2) float array."""
        arr = np.asarray(self.points, dtype=np.float64)
        arr.flags.writeable = False
        return arr

    @cached_property
    def diameter(self) -> float:
        """Largest pairwise distance (0 for a single point)."""
        if len(self.points) < 2:
            return 0.0
        p = self.as_array
        d = np.hypot(p[:, 0, None] - p[None, :, 0], p[:, 1, None] - p[None, :, 1])
        return float(d.max())


def distance(p: Sequence[float], q: Sequence[float]) -> float:
    """Euclidean distance between two points."""
    return math.hypot(q[0] - p[0], q[1] - p[1])


def min_enclosing_radius(vertices: Sequence[Sequence[float]]) -> float:
    """Radius of the smallest circle containing 1 to 3 distinct points.

    This is the disc radius at which the discs grown around the given dots
    first share a common point: 0 for a single dot, half the distance for a
    pair, and for a triple either half the longest side (right or obtuse
    triangle) or the circumradius (acute triangle).

    Raises ValueError for 0 or more than 3 vertices, or repeated points.
    """
    k = len(vertices)
    if not 1 <= k <= 3:
        raise ValueError(f"expected 1 to 3 vertices, got {k}")
    pts = [_as_point(p) for p in vertices]
    if len(set(pts)) != k:
        raise ValueError("vertices must be pairwise distinct")
    if k == 1:
        return 0.0
    if k == 2:
        return 0.5 * distance(pts[0], pts[1])

    (x0, y0), (x1, y1), (x2, y2) = pts
    a = distance(pts[1], pts[2])
    b = distance(pts[0], pts[2])
    c = distance(pts[0], pts[1])
    m = max(a, b, c)
    rest = (a * a + b * b + c * c) - m * m
    if rest - m * m <= RIGHT_ANGLE_RTOL * m * m:
        # widest angle is right or obtuse: the longest side is a diameter
        return 0.5 * m
    cross = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)
    r = (a * b * c) / (2.0 * abs(cross))
    # Rounding can push the circumradius of a nearly-right triangle a hair
    # below half its longest side; clamp so face values never exceed ours.
    return r if r > 0.5 * m else 0.5 * m


def dedupe(raw: Iterable[Sequence[float]], provenance: str | None = None) -> tuple[PointCloud, int]:
    """Build a PointCloud from raw points, dropping exact duplicates.

    First occurrences are kept and the original order is otherwise
    preserved.  Returns the cloud together with the number of points
    removed; removal also emits a warning, since duplicate dots carry no
    topological information.
    """
    pts = [_as_point(p) for p in raw]
    if not pts:
        raise ValueError("no points to ingest")
    unique = dict.fromkeys(pts)
    removed = len(pts) - len(unique)
    if removed:
        warnings.warn(f"dropped {removed} coincident point(s)", stacklevel=2)
    return PointCloud(tuple(unique), provenance=provenance), removed
