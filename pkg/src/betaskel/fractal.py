"""Recursive five-segment fractal paths and checks of their structure.

P(theta, 1) walks five equal segments from (0, 0) to (1, 0) with headings
0, +theta, 0, -theta, 0. Closing the horizontal displacement gives
``3s + 2s cos(theta) = 1``, so each segment has length
``s = 1 / (3 + 2 cos(theta))`` and the path length is ``5s``.
P(theta, k) replaces each segment of P(theta, 1) by a similar copy of
P(theta, k - 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .geom import angle_threshold, diamond_contains_many
from .skeleton import PointSet, build_skeleton, path_graph

DEFAULT_MAX_DEPTH = 7


class Orientation(str, Enum):
    ALTERNATING = "alternating"
    UNIFORM = "uniform"


# copies laid on the tilted segments are mirrored in the alternating scheme
_FLIPS = {
    Orientation.ALTERNATING: (False, True, False, True, False),
    Orientation.UNIFORM: (False,) * 5,
}


def _check_theta(theta: float) -> None:
    if not 0 < theta < math.pi / 2:
        raise ValueError(f"theta must lie in (0, pi/2), got {theta}")


@dataclass(frozen=True)
class FractalSpec:
    theta: float
    depth: int
    orientation_scheme: Orientation = Orientation.ALTERNATING
    max_depth: int = DEFAULT_MAX_DEPTH

    def __post_init__(self):
        _check_theta(self.theta)
        object.__setattr__(self, "orientation_scheme", Orientation(self.orientation_scheme))
        if self.depth < 0 or int(self.depth) != self.depth:
            raise ValueError(f"depth must be a non-negative integer, got {self.depth}")
        if self.depth > self.max_depth:
            raise ValueError(f"depth {self.depth} exceeds the cap of {self.max_depth}")


@dataclass(frozen=True)
class FractalPath:
    spec: FractalSpec
    vertices: np.ndarray
    unit_length: float
    total_length: float

    @property
    def n(self) -> int:
        return len(self.vertices)

    def pointset(self) -> PointSet:
        return PointSet(self.vertices)


def segment_length(theta: float) -> float:
    """Segment length of P(theta, 1) between unit-distance endpoints."""
    _check_theta(theta)
    return 1.0 / (3.0 + 2.0 * math.cos(theta))


def fractal_unit_dilation(theta: float) -> float:
    """Length of P(theta, 1), ``5 / (3 + 2 cos(theta))``; always > 1."""
    return 5.0 * segment_length(theta)


def _base_vertices(theta: float) -> np.ndarray:
    s = segment_length(theta)
    steps = s * np.exp(1j * np.array([0.0, theta, 0.0, -theta, 0.0]))
    z = np.concatenate([[0.0], np.cumsum(steps)])
    z[-1] = 1.0
    return z


def generate_fractal(spec: FractalSpec) -> FractalPath:
    base = _base_vertices(spec.theta)
    flips = _FLIPS[spec.orientation_scheme]
    z = np.array([0.0, 1.0], dtype=complex)
    for _ in range(spec.depth):
        m = len(z) - 1
        out = np.empty(5 * m + 1, dtype=complex)
        for seg in range(5):
            p, q = base[seg], base[seg + 1]
            shape = np.conj(z) if flips[seg] else z
            piece = p + (q - p) * shape
            # joints are copied from the base path, not recomputed
            piece[0], piece[-1] = p, q
            out[seg * m : (seg + 1) * m + 1] = piece
        z = out
    verts = np.column_stack([z.real, z.imag])
    seg_len = np.hypot(*np.diff(verts, axis=0).T)
    return FractalPath(
        spec=spec,
        vertices=verts,
        unit_length=segment_length(spec.theta),
        total_length=float(seg_len.sum()),
    )


def verify_diamond_containment(path: FractalPath, tol: float = 1e-9) -> bool:
    """Check every sub-path at every level sits in the diamond on its ends.

    At level ``j`` the path splits into ``5**j`` blocks of
    ``5**(depth - j)`` segments each; the vertices of a block must lie in
    the closed diamond with the block's endpoints as diagonal and corner
    angle theta.
    """
    verts = np.asarray(path.vertices, dtype=float)
    depth = path.spec.depth
    if len(verts) != 5**depth + 1:
        return False
    theta = path.spec.theta
    for level in range(depth + 1):
        block = 5 ** (depth - level)
        for start in range(0, len(verts) - 1, block):
            a, b = verts[start], verts[start + block]
            if np.hypot(*(b - a)) == 0:
                return False
            inside = diamond_contains_many(a, b, theta, verts[start : start + block + 1], tol)
            if not inside.all():
                return False
    return True


def skeleton_mismatch(path: FractalPath, beta: float) -> tuple[list, list]:
    """``(extra, missing)`` edges of the beta-skeleton relative to the path."""
    ps = path.pointset()
    got = build_skeleton(ps, beta).edge_set()
    want = path_graph(ps).edge_set()
    return sorted(got - want), sorted(want - got)


def verify_is_skeleton(path: FractalPath, beta: float) -> bool:
    extra, missing = skeleton_mismatch(path, beta)
    return not extra and not missing


def max_theta_for_beta(beta: float) -> float:
    """Supremum of construction angles for which the path is its own skeleton.

    Some interior vertex always sees a non-adjacent pair under an angle of
    at least ``pi - 2 theta``; that blocks the pair once it exceeds the
    threshold, i.e. for ``theta < (pi - threshold(beta)) / 2``.
    """
    return 0.5 * (math.pi - angle_threshold(beta))
