"""Persistence of pieces and holes across disc radii.

The boundary matrix of a filtration is reduced over the 2-element field; a
column that vanishes creates a feature, a column whose lowest remaining face
is j kills the feature created at j.  The resulting birth-death intervals
say how long every piece (dimension 0) and hole (dimension 1) survives as
the discs grow.  A union-find sweep over the edges reproduces the
dimension-0 intervals independently and much faster.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from .filtration import Filtration


class StructureError(Exception):
    """The filtration order is broken: a face is missing or follows a coface."""


class TopologySignature(NamedTuple):
    """Numbers of pieces and holes at one scale; the classification key."""

    pieces: int
    holes: int


@dataclass(frozen=True)
class PersistencePair:
    """One feature's birth and death radius; death is inf if it never dies."""

    dimension: int
    birth: float
    death: float

    @property
    def lifetime(self) -> float:
        return self.death - self.birth

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.death)

    @property
    def is_zero_length(self) -> bool:
        return self.death == self.birth


@dataclass(frozen=True, eq=False)
class BoundaryMatrix:
    """CSR-packed GF(2) boundary columns, one per simplex in filtration order."""

    data: np.ndarray  # int32 face positions, sorted within each column
    ptr: np.ndarray   # int64 offsets, len(columns) + 1

    def __len__(self) -> int:
        return self.ptr.shape[0] - 1

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.data[self.ptr[j]:self.ptr[j + 1]])

    @classmethod
    def from_filtration(cls, f: Filtration) -> "BoundaryMatrix":
        """Build all columns at once; raises StructureError on bad order."""
        verts, dims = f.vertices, f.dims
        total = len(f)
        n = len(f.cloud)
        pos = np.arange(total, dtype=np.int64)
        vpos = pos[dims == 0]
        epos = pos[dims == 1]
        tpos = pos[dims == 2]

        vid = verts[vpos, 0].astype(np.int64)
        if vid.size and (vid.max() >= n or np.unique(vid).size != vid.size):
            raise StructureError("vertex indices exceed the cloud or repeat")
        vmap = np.full(n, -1, dtype=np.int64)
        vmap[vid] = vpos

        if np.any(verts[epos, :2] < 0) or (epos.size and verts[epos, :2].max() >= n):
            raise StructureError("edge vertex index out of range")
        e0 = vmap[verts[epos, 0]]
        e1 = vmap[verts[epos, 1]]
        if np.any(e0 < 0) or np.any(e1 < 0):
            raise StructureError("edge with a missing vertex")
        if np.any(np.maximum(e0, e1) >= epos):
            raise StructureError("edge appears before one of its vertices")
        ecols = np.sort(np.stack([e0, e1], axis=1), axis=1)

        if tpos.size:
            if not epos.size:
                raise StructureError("triangle with a missing edge")
            ekeys = verts[epos, 0].astype(np.int64) * n + verts[epos, 1]
            eorder = np.argsort(ekeys)
            ekeys_s = ekeys[eorder]
            epos_s = epos[eorder]
            tv = verts[tpos].astype(np.int64)
            fkeys = np.stack([
                tv[:, 0] * n + tv[:, 1],
                tv[:, 0] * n + tv[:, 2],
                tv[:, 1] * n + tv[:, 2],
            ], axis=1)
            idx = np.minimum(np.searchsorted(ekeys_s, fkeys), ekeys_s.shape[0] - 1)
            if np.any(ekeys_s[idx] != fkeys):
                raise StructureError("triangle with a missing edge")
            fcols = epos_s[idx]
            if np.any(fcols.max(axis=1) >= tpos):
                raise StructureError("triangle appears before one of its edges")
            tcols = np.sort(fcols, axis=1)
        else:
            tcols = np.empty((0, 3), dtype=np.int64)

        width = np.zeros(total, dtype=np.int64)
        width[epos] = 2
        width[tpos] = 3
        ptr = np.concatenate([[0], np.cumsum(width)])
        data = np.empty(int(ptr[-1]), dtype=np.int32)
        data[ptr[epos]] = ecols[:, 0]
        data[ptr[epos] + 1] = ecols[:, 1]
        data[ptr[tpos]] = tcols[:, 0]
        data[ptr[tpos] + 1] = tcols[:, 1]
        data[ptr[tpos] + 2] = tcols[:, 2]
        return cls(data=data, ptr=ptr)


@dataclass(frozen=True, eq=False)
class Barcode:
    """All persistence pairs of one filtration, plus query machinery.

    ``pairs`` holds dimension 0 and 1, including zero-length intervals
    (reports filter those by default).  Unpaired triangle creators are kept
    separately in ``beta2_births``: with no 3-simplices they never die, and
    they are not reported as features, but the Euler identity needs them.
    """

    pairs: tuple[PersistencePair, ...]
    r_max: float
    mode: str
    point_count: int
    beta2_births: np.ndarray = field(repr=False, default_factory=lambda: np.empty(0))

    def __post_init__(self) -> None:
        dim0 = [p for p in self.pairs if p.dimension == 0]
        if len(dim0) != self.point_count:
            raise ValueError(
                f"{len(dim0)} dimension-0 pairs for {self.point_count} points"
            )
        if not any(p.is_infinite for p in dim0):
            raise ValueError("no surviving component")
        b2 = np.asarray(self.beta2_births, dtype=np.float64)
        b2.flags.writeable = False
        object.__setattr__(self, "beta2_births", b2)

    # sorted arrays for radius queries; births of dim-0 pairs are all 0
    @cached_property
    def _deaths0(self) -> np.ndarray:
        return np.sort([p.death for p in self.pairs if p.dimension == 0 and not p.is_infinite])

    @cached_property
    def _births1(self) -> np.ndarray:
        return np.sort([p.birth for p in self.pairs if p.dimension == 1])

    @cached_property
    def _deaths1(self) -> np.ndarray:
        return np.sort([p.death for p in self.pairs if p.dimension == 1 and not p.is_infinite])


def compute_persistence(f: Filtration) -> Barcode:
    """Reduce the boundary matrix and pair every simplex of the filtration.

    Deterministic given the filtration order.  Raises StructureError if the
    filtration lists a simplex before one of its faces.
    """
    bm = BoundaryMatrix.from_filtration(f)
    from . import _reduction  # deferred: JIT import is slow

    killer = _reduction.reduce_boundary(bm.data, bm.ptr)

    values, dims = f.values, f.dims
    total = len(f)
    is_killer = np.zeros(total, dtype=bool)
    is_killer[killer[killer >= 0]] = True
    creators = np.flatnonzero(~is_killer)
    cdims = dims[creators]

    pairs: list[PersistencePair] = []
    for p in creators[cdims == 0]:
        k = killer[p]
        death = float(values[k]) if k >= 0 else math.inf
        pairs.append(PersistencePair(0, 0.0, death))
    for p in creators[cdims == 1]:
        k = killer[p]
        death = float(values[k]) if k >= 0 else math.inf
        pairs.append(PersistencePair(1, float(values[p]), death))
    beta2_births = values[creators[cdims == 2]]

    return Barcode(
        pairs=tuple(pairs),
        r_max=f.r_max,
        mode=f.mode,
        point_count=len(f.cloud),
        beta2_births=beta2_births,
    )


def connected_persistence(f: Filtration) -> list[PersistencePair]:
    """Dimension-0 pairs via union-find over the edges, in filtration order.

    When two components merge, the one whose smallest original vertex index
    is larger dies at the edge's value (all births are 0, so the tie-break
    is what makes the sweep deterministic).  The multiset of (birth, death)
    intervals equals the dimension-0 output of :func:`compute_persistence`.
    """
    n = len(f.cloud)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairs: list[PersistencePair] = []
    edges = np.flatnonzero(f.dims == 1)
    for pos in edges:
        i, j = int(f.vertices[pos, 0]), int(f.vertices[pos, 1])
        ri, rj = find(i), find(j)
        if ri == rj:
            continue
        # roots equal their component's smallest vertex, so min(ri, rj)
        # is the survivor under the elder tie-break
        old, young = (ri, rj) if ri < rj else (rj, ri)
        parent[young] = old
        pairs.append(PersistencePair(0, 0.0, float(f.values[pos])))
    for v in range(n):
        if find(v) == v:
            pairs.append(PersistencePair(0, 0.0, math.inf))
    return pairs


def betti_at(b: Barcode, r: float) -> TopologySignature:
    """Pieces and holes at radius r, counting each pair over [birth, death).

    A feature is counted at its birth radius and no longer at its death
    radius; infinite deaths count at every radius.  Raises ValueError for r
    outside [0, r_max], where the counts would be unreliable.
    """
    if not 0 <= r <= b.r_max:
        raise ValueError(f"radius {r} outside [0, {b.r_max}]")
    pieces = b.point_count - int(np.searchsorted(b._deaths0, r, side="right"))
    holes = int(np.searchsorted(b._births1, r, side="right")) - int(
        np.searchsorted(b._deaths1, r, side="right")
    )
    return TopologySignature(pieces, holes)


def beta2_at(b: Barcode, r: float) -> int:
    """Rank of 2-cycles trapped in the 2-skeleton at radius r.

    Not a reported feature (nothing in the plane bounds a void); exists so
    the Euler identity V - E + T = pieces - holes + beta2 can be checked
    exactly.
    """
    if not 0 <= r <= b.r_max:
        raise ValueError(f"radius {r} outside [0, {b.r_max}]")
    return int(np.searchsorted(b.beta2_births, r, side="right"))


def betti_table(b: Barcode, radii: Iterable[float]) -> list[tuple[float, TopologySignature]]:
    """One (radius, signature) row per requested radius.

    Radii must be strictly increasing and within [0, r_max].
    """
    rs = [float(r) for r in radii]
    if any(rs[i] >= rs[i + 1] for i in range(len(rs) - 1)):
        raise ValueError("radii must be strictly increasing")
    return [(r, betti_at(b, r)) for r in rs]
