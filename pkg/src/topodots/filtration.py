"""Growing-disc filtrations of a point cloud.

A filtration lists every vertex, edge and triangle on the dots together with
the disc radius at which it appears, sorted so that faces always precede the
simplices they bound.  Two constructions are provided: the nerve of the
actual disc union (Čech), whose triangle values are smallest-enclosing-circle
radii, and the cheaper variant where a triangle appears as soon as its three
edges do (Vietoris-Rips).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

import numpy as np

from .geometry import RIGHT_ANGLE_RTOL, PointCloud

Mode = Literal["cech", "rips"]

_MODES = ("cech", "rips")


@dataclass(frozen=True)
class Simplex:
    """A vertex, edge or triangle given by strictly increasing point indices."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        v = tuple(int(i) for i in self.vertices)
        if not 1 <= len(v) <= 3:
            raise ValueError(f"a simplex has 1 to 3 vertices, got {len(v)}")
        if any(i < 0 for i in v):
            raise ValueError(f"negative vertex index in {v}")
        if any(v[i] >= v[i + 1] for i in range(len(v) - 1)):
            raise ValueError(f"vertex indices must be strictly increasing, got {v}")
        object.__setattr__(self, "vertices", v)

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    def faces(self) -> tuple["Simplex", ...]:
        """The codimension-1 faces (empty for a vertex)."""
        if len(self.vertices) == 1:
            return ()
        v = self.vertices
        return tuple(Simplex(v[:i] + v[i + 1:]) for i in range(len(v)))


@dataclass(frozen=True)
class FilteredSimplex:
    """A simplex tagged with the disc radius at which it appears."""

    simplex: Simplex
    value: float


@dataclass(frozen=True, eq=False)
class Filtration:
    """All simplices of a growing-disc complex, in order of appearance.

    Ties are broken by (value, dimension, vertex tuple), which guarantees a
    deterministic order with faces before cofaces.  Storage is columnar:
    ``values[i]``, ``vertices[i]`` (padded with -1) and ``dims[i]`` describe
    the i-th simplex; indexing and iteration materialize
    :class:`FilteredSimplex` views on demand.
    """

    cloud: PointCloud
    mode: str
    r_max: float
    values: np.ndarray    # (N,) float64, non-decreasing
    vertices: np.ndarray  # (N, 3) int32, -1 padded
    dims: np.ndarray      # (N,) int8

    def __post_init__(self) -> None:
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")
        if not self.r_max > 0:
            raise ValueError(f"r_max must be positive, got {self.r_max}")
        values = np.asarray(self.values, dtype=np.float64).copy()
        verts = np.asarray(self.vertices, dtype=np.int32).copy()
        dims = np.asarray(self.dims, dtype=np.int8).copy()
        n = values.shape[0]
        if verts.shape != (n, 3) or dims.shape != (n,):
            raise ValueError("values, vertices and dims disagree in shape")
        if n and (values[0] < 0 or values[-1] > self.r_max or np.any(np.diff(values) < 0)):
            raise ValueError("filtration values must be non-decreasing within [0, r_max]")
        for arr in (values, verts, dims):
            arr.flags.writeable = False
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "dims", dims)

    def __len__(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, i: int) -> FilteredSimplex:
        n = len(self)
        if i < 0:
            i += n
        if not 0 <= i < n:
            raise IndexError(i)
        d = int(self.dims[i])
        return FilteredSimplex(
            Simplex(tuple(int(v) for v in self.vertices[i, : d + 1])),
            float(self.values[i]),
        )

    def __iter__(self) -> Iterator[FilteredSimplex]:
        for i in range(len(self)):
            yield self[i]

    @property
    def simplices(self) -> "Filtration":
        """Sequence view of the filtered simplices (the filtration itself)."""
        return self

    def counts(self) -> tuple[int, int, int]:
        """Number of vertices, edges and triangles."""
        return (
            int(np.count_nonzero(self.dims == 0)),
            int(np.count_nonzero(self.dims == 1)),
            int(np.count_nonzero(self.dims == 2)),
        )


def default_r_max(cloud: PointCloud) -> float:
    """Half the cloud diameter, padded by 1%.

    Enough to reach the one-blob regime on convex-ish clouds.  A single dot
    has diameter 0; any positive radius works there, so use 1.
    """
    d = cloud.diameter
    return 0.505 * d if d > 0 else 1.0


def build_cech(cloud: PointCloud, r_max: float | None = None) -> Filtration:
    """Nerve of the union of discs of growing radius around the dots.

    Every vertex appears at 0, every pair at half its distance (where the two
    discs first touch) and every triple at the smallest enclosing circle
    radius (where the three discs first share a point), capped at ``r_max``.
    The complex at radius r therefore has exactly the pieces and holes of the
    drawn disc union.
    """
    return _build(cloud, r_max, "cech")


def build_rips(cloud: PointCloud, r_max: float | None = None) -> Filtration:
    """Like :func:`build_cech`, but a triangle appears once all its edges do.

    Vertex and edge values are identical to Čech; each triangle value is the
    maximum of its three edge values, which never exceeds the Čech value.
    """
    return _build(cloud, r_max, "rips")


def critical_radii(f: Filtration) -> list[float]:
    """Strictly increasing list of distinct filtration values.

    Piece and hole counts are constant between consecutive entries.
    """
    return np.unique(f.values).tolist()


def _build(cloud: PointCloud, r_max: float | None, mode: Mode) -> Filtration:
    if r_max is None:
        r_max = default_r_max(cloud)
    r_max = float(r_max)
    if not r_max > 0:
        raise ValueError(f"r_max must be positive, got {r_max}")

    p = cloud.as_array
    n = len(cloud)
    d = np.hypot(p[:, 0, None] - p[None, :, 0], p[:, 1, None] - p[None, :, 1])

    iu, ju = np.triu_indices(n, k=1)
    ev = d[iu, ju] * 0.5
    keep = ev <= r_max
    ei = iu[keep].astype(np.int32)
    ej = ju[keep].astype(np.int32)
    ev = ev[keep]

    # Triples are enumerated only over pairs that survived the r_max cut and
    # pruned by the other two edges before any triangle value is computed.
    counts = (n - 1) - ej.astype(np.int64)
    total = int(counts.sum())
    ti = np.repeat(ei, counts)
    tj = np.repeat(ej, counts)
    offs = np.cumsum(counts) - counts
    tk = (tj + 1 + (np.arange(total, dtype=np.int64) - np.repeat(offs, counts))).astype(np.int32)

    d_ij = d[ti, tj]
    d_ik = d[ti, tk]
    d_jk = d[tj, tk]
    ok = (d_ik * 0.5 <= r_max) & (d_jk * 0.5 <= r_max)
    ti, tj, tk = ti[ok], tj[ok], tk[ok]
    d_ij, d_ik, d_jk = d_ij[ok], d_ik[ok], d_jk[ok]

    if mode == "rips":
        tv = np.maximum(d_ij, np.maximum(d_ik, d_jk)) * 0.5
    else:
        # Same arithmetic as geometry.min_enclosing_radius, vectorized: the
        # shared hypot distances make an obtuse triangle's value bitwise
        # equal to its longest edge's.
        a, b, c = d_jk, d_ik, d_ij
        m = np.maximum(a, np.maximum(b, c))
        rest = (a * a + b * b + c * c) - m * m
        tv = 0.5 * m
        acute = rest - m * m > RIGHT_ANGLE_RTOL * m * m
        if np.any(acute):
            xi, yi = p[ti[acute], 0], p[ti[acute], 1]
            xj, yj = p[tj[acute], 0], p[tj[acute], 1]
            xk, yk = p[tk[acute], 0], p[tk[acute], 1]
            cross = (xj - xi) * (yk - yi) - (xk - xi) * (yj - yi)
            circ = (a[acute] * b[acute] * c[acute]) / (2.0 * np.abs(cross))
            tv[acute] = np.maximum(circ, tv[acute])
        keep_t = tv <= r_max
        ti, tj, tk, tv = ti[keep_t], tj[keep_t], tk[keep_t], tv[keep_t]

    ne, nt = ev.shape[0], tv.shape[0]
    total_n = n + ne + nt
    values = np.concatenate([np.zeros(n), ev, tv])
    verts = np.full((total_n, 3), -1, dtype=np.int32)
    verts[:n, 0] = np.arange(n, dtype=np.int32)
    verts[n:n + ne, 0] = ei
    verts[n:n + ne, 1] = ej
    verts[n + ne:, 0] = ti
    verts[n + ne:, 1] = tj
    verts[n + ne:, 2] = tk
    dims = np.concatenate([
        np.zeros(n, dtype=np.int8),
        np.ones(ne, dtype=np.int8),
        np.full(nt, 2, dtype=np.int8),
    ])

    order = np.lexsort((verts[:, 2], verts[:, 1], verts[:, 0], dims, values))
    return Filtration(
        cloud=cloud,
        mode=mode,
        r_max=r_max,
        values=values[order],
        vertices=verts[order],
        dims=dims[order],
    )
