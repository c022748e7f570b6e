"""Shared helpers: slow-but-obvious reference implementations.

Everything here recomputes results the package also computes, by a
different route: set-based column reduction, dense GF(2) Gaussian
elimination, and brute-force simplex enumeration.  Tests compare the
fast paths against these.
"""
from __future__ import annotations

import math

import numpy as np
import pytest

import topodots as td


def random_cloud(seed: int, n: int, box: float = 10.0) -> td.PointCloud:
    rng = np.random.default_rng(seed)
    cloud, _ = td.dedupe([tuple(p) for p in rng.uniform(0.0, box, (n, 2))])
    return cloud


def naive_pairs(f: td.Filtration) -> list[tuple[int, float, float]]:
    """Persistence pairs by textbook set-based reduction, O(m^2) and proud."""
    bm = td.BoundaryMatrix.from_filtration(f)
    stored: dict[int, tuple[int, frozenset[int]]] = {}
    killer_of = [-1] * len(bm)
    for j in range(len(bm)):
        col = set(bm.column(j))
        while col:
            low = max(col)
            if low not in stored:
                stored[low] = (j, frozenset(col))
                killer_of[low] = j
                break
            col ^= stored[low][1]
    values = f.values
    dims = f.dims
    is_killer = [False] * len(bm)
    for k in killer_of:
        if k >= 0:
            is_killer[k] = True
    out = []
    for i in range(len(bm)):
        if is_killer[i]:
            continue
        death = values[killer_of[i]] if killer_of[i] >= 0 else math.inf
        out.append((int(dims[i]), float(values[i]), float(death)))
    return out


def barcode_pairs(b: td.Barcode) -> list[tuple[int, float, float]]:
    return [(p.dimension, p.birth, p.death) for p in b.pairs]


def gf2_rank(m: np.ndarray) -> int:
    """Rank over GF(2) by plain Gaussian elimination on a bool matrix."""
    m = m.copy()
    rank = 0
    for c in range(m.shape[1]):
        rows = np.nonzero(m[rank:, c])[0]
        if rows.size == 0:
            continue
        p = rank + rows[0]
        m[[rank, p]] = m[[p, rank]]
        hit = m[:, c].copy()
        hit[rank] = False
        m[hit] ^= m[rank]
        rank += 1
        if rank == m.shape[0]:
            break
    return rank


def betti_by_rank(f: td.Filtration, r: float) -> tuple[int, int, int]:
    """(b0, b1, b2) at radius r from boundary-matrix ranks over GF(2)."""
    verts = []
    edges = []
    tris = []
    for i, fs in enumerate(f):
        if f.values[i] > r:
            break
        v = fs.simplex.vertices
        (verts if len(v) == 1 else edges if len(v) == 2 else tris).append(v)
    vix = {v[0]: i for i, v in enumerate(verts)}
    eix = {e: i for i, e in enumerate(edges)}
    d1 = np.zeros((len(verts), len(edges)), dtype=bool)
    for j, (a, b) in enumerate(edges):
        d1[vix[a], j] = True
        d1[vix[b], j] = True
    d2 = np.zeros((len(edges), len(tris)), dtype=bool)
    for j, (a, b, c) in enumerate(tris):
        d2[eix[(a, b)], j] = True
        d2[eix[(a, c)], j] = True
        d2[eix[(b, c)], j] = True
    r1 = gf2_rank(d1)
    r2 = gf2_rank(d2)
    b0 = len(verts) - r1
    b1 = len(edges) - r1 - r2
    b2 = len(tris) - r2
    return b0, b1, b2


@pytest.fixture(scope="session")
def noisy_circle() -> td.PointCloud:
    return td.generate("circle", n=60, radius=10.0, noise=0.2, seed=1)


@pytest.fixture(scope="session")
def figure_eight() -> td.PointCloud:
    return td.generate("figure_eight", n=80, radius=5.0, noise=0.1, seed=2)


@pytest.fixture(scope="session")
def unit_square() -> td.PointCloud:
    cloud, _ = td.dedupe([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
    return cloud


@pytest.fixture(scope="session")
def equilateral() -> td.PointCloud:
    cloud, _ = td.dedupe([(0.0, 0.0), (2.0, 0.0), (1.0, math.sqrt(3.0))])
    return cloud
