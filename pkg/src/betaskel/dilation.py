"""Exact dilation (stretch factor) of geometric graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.sparse.csgraph import dijkstra

from .skeleton import SkeletonGraph, as_pointset


class Unreachable(float):
    """Pair dilation of a disconnected pair.

    Compares and prints as ``inf`` but can be told apart with
    ``isinstance(x, Unreachable)``.
    """

    def __new__(cls):
        return super().__new__(cls, float("inf"))

    def __repr__(self):
        return "Unreachable()"


UNREACHABLE = Unreachable()


@dataclass(frozen=True)
class DilationReport:
    max_dilation: float
    witness_pair: Optional[tuple]
    per_pair_available: bool = False
    disconnected: bool = False
    ratios: Optional[np.ndarray] = None


def _check_pair(n: int, s: int, t: int) -> None:
    if s == t:
        raise ValueError("dilation of a vertex with itself is undefined")
    if not (0 <= s < n and 0 <= t < n):
        raise IndexError(f"pair ({s}, {t}) out of range for {n} vertices")


def shortest_path_length(g: SkeletonGraph, s: int, t: int) -> float:
    _check_pair(g.n, s, t)
    d = dijkstra(g.csgraph(), directed=False, indices=s)
    return float(d[t])


def pair_dilation(g: SkeletonGraph, ps, s: int, t: int) -> float:
    """Graph distance over Euclidean distance; :data:`UNREACHABLE` if none."""
    ps = as_pointset(ps)
    length = shortest_path_length(g, s, t)
    if not np.isfinite(length):
        return UNREACHABLE
    return length / ps.dist(s, t)


def graph_dilation(g: SkeletonGraph, ps, keep_matrix: bool = False, block: int = 256) -> DilationReport:
    """Maximum pair dilation with a witness pair.

    Runs Dijkstra from every vertex (in blocks of sources). Ties on the
    maximum go to the lexicographically smallest pair. Disconnected pairs are
    skipped and flagged through ``disconnected``.
    """
    ps = as_pointset(ps)
    n = len(ps)
    if n < 2:
        raise ValueError("dilation needs at least two points")
    if g.n != n:
        raise ValueError(f"graph has {g.n} vertices but point set has {n}")
    adj = g.csgraph()
    coords = ps.coords
    best, witness, disconnected = -np.inf, None, False
    full = np.full((n, n), np.nan) if keep_matrix else None
    for lo in range(0, n, block):
        src = np.arange(lo, min(lo + block, n))
        d = dijkstra(adj, directed=False, indices=src)
        diff = coords[src][:, None, :] - coords[None, :, :]
        eu = np.hypot(diff[..., 0], diff[..., 1])
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = d / eu
        upper = np.arange(n)[None, :] > src[:, None]
        ratio[~upper] = np.nan
        unreachable = upper & ~np.isfinite(d)
        if unreachable.any():
            disconnected = True
            ratio[unreachable] = np.nan
        if full is not None:
            full[src] = ratio
        if np.all(np.isnan(ratio)):
            continue
        m = np.nanmax(ratio)
        if m > best:
            r, c = np.argwhere(ratio == m)[0]
            best, witness = float(m), (int(src[r]), int(c))
    if full is not None:
        full = np.fmax(full, full.T)
    if witness is None:
        return DilationReport(np.nan, None, keep_matrix, disconnected, full)
    return DilationReport(best, witness, keep_matrix, disconnected, full)
