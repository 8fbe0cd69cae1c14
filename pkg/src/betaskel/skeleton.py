"""Point sets, skeleton graphs, beta-skeletons, k-beta-skeletons and the EMST."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.spatial import cKDTree

from .geom import (
    ANGLE_TOL,
    COINCIDENT_TOL,
    GeometryError,
    Point,
    angle_at,
    angle_threshold,
    angles_at,
)


class PointSet:
    """Immutable ordered point set with stable zero-based indices.

    Duplicate points (closer than ``COINCIDENT_TOL``) are rejected.
    """

    def __init__(self, points):
        coords = np.array([tuple(Point(*p)) for p in points], dtype=float).reshape(-1, 2)
        if len(coords) == 0:
            raise GeometryError("a point set needs at least one point")
        if len(coords) > 1:
            close = cKDTree(coords).query_pairs(COINCIDENT_TOL)
            if close:
                i, j = min(close)
                raise GeometryError(f"duplicate points at indices {i} and {j}")
        coords.setflags(write=False)
        self._coords = coords

    @property
    def coords(self) -> np.ndarray:
        """Read-only ``(n, 2)`` coordinate array."""
        return self._coords

    def __len__(self) -> int:
        return len(self._coords)

    def __getitem__(self, i: int) -> Point:
        return Point(*self._coords[i])

    def __iter__(self):
        return (Point(x, y) for x, y in self._coords)

    def __eq__(self, other):
        return isinstance(other, PointSet) and np.array_equal(self._coords, other._coords)

    def __repr__(self):
        return f"PointSet(n={len(self)})"

    def dist(self, i: int, j: int) -> float:
        d = self._coords[i] - self._coords[j]
        return float(np.hypot(d[0], d[1]))


def as_pointset(ps) -> PointSet:
    return ps if isinstance(ps, PointSet) else PointSet(ps)


@dataclass(frozen=True)
class SkeletonGraph:
    """Undirected geometric graph on point indices ``0..n-1``.

    ``edges`` holds sorted pairs ``(i, j)`` with ``i < j`` in lexicographic
    order; ``lengths[e]`` is the Euclidean length of ``edges[e]``.
    """

    n: int
    edges: tuple
    lengths: np.ndarray = field(repr=False)

    @classmethod
    def from_edges(cls, ps, pairs: Iterable[Sequence[int]]) -> "SkeletonGraph":
        ps = as_pointset(ps)
        n = len(ps)
        norm = set()
        for i, j in pairs:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"edge ({i}, {j}) out of range for {n} points")
            norm.add((min(i, j), max(i, j)))
        edges = tuple(sorted(norm))
        if edges:
            idx = np.array(edges)
            diff = ps.coords[idx[:, 0]] - ps.coords[idx[:, 1]]
            lengths = np.hypot(diff[:, 0], diff[:, 1])
        else:
            lengths = np.zeros(0)
        lengths.setflags(write=False)
        return cls(n, edges, lengths)

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._lookup

    @property
    def _lookup(self) -> frozenset:
        cached = self.__dict__.get("_edge_lookup")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_lookup", cached)
        return cached

    def neighbors(self, i: int) -> list[int]:
        return sorted({b if a == i else a for a, b in self.edges if i in (a, b)})

    def with_edges(self, ps, extra) -> "SkeletonGraph":
        return SkeletonGraph.from_edges(ps, list(self.edges) + list(extra))

    def csgraph(self):
        """Symmetric scipy CSR adjacency matrix weighted by edge length."""
        from scipy.sparse import csr_matrix

        if not self.edges:
            return csr_matrix((self.n, self.n))
        idx = np.array(self.edges)
        rows = np.concatenate([idx[:, 0], idx[:, 1]])
        cols = np.concatenate([idx[:, 1], idx[:, 0]])
        w = np.concatenate([self.lengths, self.lengths])
        return csr_matrix((w, (rows, cols)), shape=(self.n, self.n))


def path_graph(ps, order: Sequence[int] | None = None) -> SkeletonGraph:
    """Graph joining consecutive points (in ``order`` if given)."""
    ps = as_pointset(ps)
    order = range(len(ps)) if order is None else order
    order = list(order)
    return SkeletonGraph.from_edges(ps, zip(order[:-1], order[1:]))


def blocker_count(ps, i: int, j: int, beta: float, limit: int | None = None) -> int:
    """Number of points that see edge ij under an angle above the threshold.

    Stops counting once ``limit`` is reached.
    """
    ps = as_pointset(ps)
    n = len(ps)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"index out of range for {n} points")
    if i == j:
        raise ValueError("edge endpoints must differ")
    thr = angle_threshold(beta) + ANGLE_TOL
    count = 0
    a, b = ps[i], ps[j]
    for c in range(n):
        if c == i or c == j:
            continue
        if angle_at(ps[c], a, b) > thr:
            count += 1
            if limit is not None and count >= limit:
                break
    return count


def edge_in_skeleton(ps, i: int, j: int, beta: float, k: int = 1) -> bool:
    """True iff fewer than ``k`` witnesses block edge ij (k = 1: plain skeleton)."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return blocker_count(ps, i, j, beta, limit=k) < k


def _skeleton_pairs(coords: np.ndarray, beta: float, k: int) -> list[tuple[int, int]]:
    """All pairs with fewer than ``k`` blockers.

    Brute force over every pair and every witness, vectorised per source
    vertex. Witnesses are scanned in chunks of growing size, starting just
    after the source index and wrapping around, and a pair stops being
    examined as soon as it has ``k`` blockers.
    """
    n = len(coords)
    thr = angle_threshold(beta) + ANGLE_TOL
    x, y = coords[:, 0], coords[:, 1]
    pairs: list[tuple[int, int]] = []
    for i in range(n - 1):
        js = np.arange(i + 1, n)
        counts = np.zeros(len(js), dtype=np.int64)
        scan = np.roll(np.arange(n), -(i + 1))
        start, size = 0, 32
        while start < n and len(js):
            cs = scan[start : start + size]
            start += size
            size *= 2
            ux = x[i] - x[cs][None, :]
            uy = y[i] - y[cs][None, :]
            vx = x[js][:, None] - x[cs][None, :]
            vy = y[js][:, None] - y[cs][None, :]
            ang = np.arctan2(np.abs(ux * vy - uy * vx), ux * vx + uy * vy)
            hit = ang > thr
            hit &= cs[None, :] != i
            hit &= cs[None, :] != js[:, None]
            counts += hit.sum(axis=1)
            keep = counts < k
            js, counts = js[keep], counts[keep]
        pairs.extend((i, int(j)) for j in js)
    return pairs


def build_k_skeleton(ps, beta: float, k: int) -> SkeletonGraph:
    """k-beta-skeleton: edge ij present iff at most ``k - 1`` points block it."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    angle_threshold(beta)  # validates beta
    ps = as_pointset(ps)
    return SkeletonGraph.from_edges(ps, _skeleton_pairs(ps.coords, beta, int(k)))


def build_skeleton(ps, beta: float) -> SkeletonGraph:
    """The beta-skeleton of ``ps`` by exhaustive pair/witness search."""
    return build_k_skeleton(ps, beta, 1)


def euclidean_mst(ps) -> SkeletonGraph:
    """Kruskal over the complete Euclidean graph.

    Equal-length edges are taken in lexicographic index order.
    """
    ps = as_pointset(ps)
    n = len(ps)
    if n == 1:
        return SkeletonGraph.from_edges(ps, [])
    ii, jj = np.triu_indices(n, 1)
    diff = ps.coords[ii] - ps.coords[jj]
    w = np.hypot(diff[:, 0], diff[:, 1])
    order = np.lexsort((jj, ii, w))

    parent = list(range(n))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    chosen = []
    for e in order:
        ru, rv = find(int(ii[e])), find(int(jj[e]))
        if ru != rv:
            parent[ru] = rv
            chosen.append((int(ii[e]), int(jj[e])))
            if len(chosen) == n - 1:
                break
    return SkeletonGraph.from_edges(ps, chosen)
