"""Signatures, groupings and synthetic clouds.

Everything downstream of a barcode lives here: the (pieces, holes) signature
of a cloud at one scale, grouping labeled objects by equal signatures, the
radius-by-radius profile table, and deterministic sample generators for
circles, annuli, figure eights and grids.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .filtration import Filtration, build_cech, build_rips, critical_radii, default_r_max
from .geometry import Point2, PointCloud, dedupe
from .persistence import (
    Barcode,
    PersistencePair,
    TopologySignature,
    betti_table,
    compute_persistence,
)

_BUILDERS = {"cech": build_cech, "rips": build_rips}

SHAPES = ("circle", "annulus", "figure_eight", "grid")


@dataclass(frozen=True)
class BettiProfile:
    """Signature as a function of radius: one table like the worked example."""

    entries: tuple[tuple[float, TopologySignature], ...]
    source: str | None
    mode: str

    def __post_init__(self) -> None:
        rs = [r for r, _ in self.entries]
        if any(rs[i] >= rs[i + 1] for i in range(len(rs) - 1)):
            raise ValueError("profile radii must be strictly increasing")
        ps = [s.pieces for _, s in self.entries]
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError("pieces must be non-increasing across radii")


@dataclass(frozen=True)
class LabeledSignature:
    """A named object reduced to its signature."""

    name: str
    signature: TopologySignature

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("label must be nonempty")


@dataclass(frozen=True)
class SignatureGroup:
    """Objects that share one signature: a topological-equivalence class."""

    signature: TopologySignature
    members: tuple[str, ...]


def _build(cloud: PointCloud, r_max: float | None, mode: str) -> Filtration:
    try:
        builder = _BUILDERS[mode]
    except KeyError:
        raise ValueError(f"mode must be one of {tuple(_BUILDERS)}, got {mode!r}") from None
    return builder(cloud, r_max)


def signature_at(cloud: PointCloud, r: float, mode: str = "cech") -> TopologySignature:
    """Pieces and holes of the cloud's disc union at radius r."""
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    if r == 0:
        return TopologySignature(len(cloud), 0)
    f = _build(cloud, r, mode)
    from .persistence import betti_at

    return betti_at(compute_persistence(f), r)


def group_by_signature(items: list[LabeledSignature]) -> list[SignatureGroup]:
    """Partition labeled objects by exact signature equality.

    Groups come out sorted by (pieces, holes); members keep input order.
    """
    buckets: dict[TopologySignature, list[str]] = {}
    for item in items:
        buckets.setdefault(item.signature, []).append(item.name)
    return [SignatureGroup(sig, tuple(names)) for sig, names in sorted(buckets.items())]


def profile(
    cloud: PointCloud,
    radii: list[float],
    mode: str = "cech",
    r_max: float | None = None,
) -> BettiProfile:
    """Betti table of the cloud over the given radii."""
    if not radii:
        raise ValueError("at least one radius is required")
    if r_max is None:
        r_max = max(radii) if max(radii) > 0 else default_r_max(cloud)
    elif r_max < max(radii):
        raise ValueError(f"r_max {r_max} is below the largest radius {max(radii)}")
    f = _build(cloud, r_max, mode)
    entries = betti_table(compute_persistence(f), radii)
    return BettiProfile(entries=tuple(entries), source=cloud.provenance, mode=mode)


def auto_profile(
    cloud: PointCloud,
    mode: str = "cech",
    r_max: float | None = None,
    cap: int = 32,
) -> BettiProfile:
    """Betti table over automatically chosen radii (see :func:`default_radii`)."""
    f = _build(cloud, r_max, mode)
    entries = betti_table(compute_persistence(f), default_radii(f, cap=cap))
    return BettiProfile(entries=tuple(entries), source=cloud.provenance, mode=mode)


def most_persistent(b: Barcode, dimension: int, k: int = 1) -> list[PersistencePair]:
    """The k longest-lived features of one dimension, never-dying ones first.

    Ties go to the earlier birth, then to barcode order.  Returns fewer than
    k pairs if fewer exist.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    ranked = sorted(
        ((i, p) for i, p in enumerate(b.pairs) if p.dimension == dimension),
        key=lambda ip: (-ip[1].lifetime, ip[1].birth, ip[0]),
    )
    return [p for _, p in ranked[:k]]


def default_radii(f: Filtration, cap: int = 32) -> list[float]:
    """Report radii when the user gives none: midpoints between critical radii.

    Between consecutive critical radii the picture cannot change, so the
    midpoints see every distinct topology exactly once.  Capped by an even
    index subsample; a filtration with a single critical radius (one dot)
    reports at that radius itself.
    """
    crit = critical_radii(f)
    if len(crit) < 2:
        return [crit[0]]
    mids = np.unique((np.asarray(crit[:-1]) + np.asarray(crit[1:])) * 0.5)
    if mids.size > cap:
        idx = np.unique(np.linspace(0, mids.size - 1, cap).round().astype(int))
        mids = mids[idx]
    return mids.tolist()


def generate(
    shape: str,
    n: int = 60,
    seed: int = 0,
    noise: float = 0.0,
    radius: float = 10.0,
    inner: float = 5.0,
    outer: float = 10.0,
    rows: int = 5,
    cols: int = 5,
    spacing: float = 1.0,
    center: tuple[float, float] = (0.0, 0.0),
) -> PointCloud:
    """Deterministic sample of a named shape with additive Gaussian noise.

    circle        n dots at evenly spaced angles on a circle of the given
                  radius around center
    annulus       n dots at evenly spaced angles, radii drawn uniformly
                  between inner and outer
    figure_eight  two tangent circles of the given radius, centered at
                  center +- (radius, 0), dots split evenly between them
    grid          rows x cols lattice with the given spacing, lower-left
                  corner at center

    Coordinate noise is N(0, noise^2) per axis from a seeded generator, so
    identical calls produce identical clouds.
    """
    if shape not in SHAPES:
        raise ValueError(f"shape must be one of {SHAPES}, got {shape!r}")
    if noise < 0:
        raise ValueError(f"noise must be non-negative, got {noise}")
    rng = np.random.default_rng(seed)
    cx, cy = float(center[0]), float(center[1])

    if shape == "grid":
        if rows < 1 or cols < 1 or rows * cols < 3:
            raise ValueError(f"grid needs at least 3 dots, got {rows}x{cols}")
        if spacing <= 0:
            raise ValueError(f"spacing must be positive, got {spacing}")
        gx, gy = np.meshgrid(np.arange(cols) * spacing, np.arange(rows) * spacing)
        pts = np.column_stack([gx.ravel() + cx, gy.ravel() + cy])
        label = f"grid(rows={rows},cols={cols},spacing={spacing:g},noise={noise:g},seed={seed})"
    else:
        if n < 3:
            raise ValueError(f"need at least 3 dots, got {n}")
        if radius <= 0:
            raise ValueError(f"radius must be positive, got {radius}")
        if shape == "circle":
            theta = np.arange(n) * (2 * np.pi / n)
            pts = np.column_stack([cx + radius * np.cos(theta), cy + radius * np.sin(theta)])
            label = f"circle(n={n},radius={radius:g},noise={noise:g},seed={seed})"
        elif shape == "annulus":
            if not 0 < inner < outer:
                raise ValueError(f"need 0 < inner < outer, got {inner}, {outer}")
            theta = np.arange(n) * (2 * np.pi / n)
            rad = rng.uniform(inner, outer, n)
            pts = np.column_stack([cx + rad * np.cos(theta), cy + rad * np.sin(theta)])
            label = f"annulus(n={n},inner={inner:g},outer={outer:g},noise={noise:g},seed={seed})"
        else:  # figure_eight
            n_left = n // 2
            t1 = np.arange(n_left) * (2 * np.pi / n_left)
            # half-step offset keeps the second lobe off the tangent point,
            # which the first lobe hits exactly at angle 0
            t2 = (np.arange(n - n_left) + 0.5) * (2 * np.pi / (n - n_left))
            pts = np.concatenate([
                np.column_stack([cx - radius + radius * np.cos(t1), cy + radius * np.sin(t1)]),
                np.column_stack([cx + radius + radius * np.cos(t2), cy + radius * np.sin(t2)]),
            ])
            label = f"figure_eight(n={n},radius={radius:g},noise={noise:g},seed={seed})"

    if noise > 0:
        pts = pts + rng.normal(0.0, noise, pts.shape)
    cloud, _ = dedupe([Point2(float(x), float(y)) for x, y in pts], provenance=label)
    return cloud
