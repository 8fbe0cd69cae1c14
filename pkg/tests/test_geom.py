import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from betaskel.geom import (
    AngleParams,
    Diamond,
    GeometryError,
    Point,
    angle_at,
    angle_threshold,
    diamond_contains,
    region_boundary_distance,
    region_contains,
)

BETAS = [0.25, 0.5, 1 / math.sqrt(2), 1.0, math.sqrt(2), 2.0]
coord = st.floats(-100, 100, allow_nan=False, allow_infinity=False)


def test_point_rejects_non_finite():
    with pytest.raises(GeometryError):
        Point(float("nan"), 0)
    with pytest.raises(GeometryError):
        Point(0, float("inf"))
    assert Point(1, 2) == (1.0, 2.0)


@pytest.mark.parametrize(
    "apex, a, b, expected",
    [
        ((0, 0), (1, 0), (0, 1), math.pi / 2),
        ((0, 0), (1, 0), (-1, 0), math.pi),
        ((0, 0), (1, 0), (1, 1), math.pi / 4),
    ],
)
def test_angle_at_examples(apex, a, b, expected):
    assert angle_at(apex, a, b) == pytest.approx(expected, abs=1e-15)


def test_angle_at_degenerate():
    with pytest.raises(GeometryError):
        angle_at((0, 0), (0, 0), (1, 1))
    with pytest.raises(GeometryError):
        angle_at((1, 1), (0, 0), (1, 1 + 1e-13))


def test_angle_at_accurate_near_pi():
    # arccos of a normalised dot product loses half the digits here
    eps = 1e-10
    ang = angle_at((0, 0), (1, 0), (-1, eps))
    assert math.pi - ang == pytest.approx(eps, rel=1e-6)


@pytest.mark.parametrize(
    "beta, expected",
    [(1.0, math.pi / 2), (2.0, math.pi / 6), (1 / math.sqrt(2), 3 * math.pi / 4)],
)
def test_angle_threshold_examples(beta, expected):
    assert angle_threshold(beta) == pytest.approx(expected, abs=1e-15)


def test_angle_threshold_continuous_at_one():
    assert angle_threshold(1 - 1e-12) == pytest.approx(math.pi / 2, abs=1e-5)
    assert angle_threshold(1 + 1e-12) == pytest.approx(math.pi / 2, abs=1e-5)


@pytest.mark.parametrize("beta", [0.0, -1.0])
def test_angle_threshold_rejects_nonpositive(beta):
    with pytest.raises(ValueError):
        angle_threshold(beta)


def test_angle_params():
    p = AngleParams.from_beta(0.5)
    assert p.theta_threshold >= math.pi / 2
    assert p.blocks(p.theta_threshold + 1e-6)
    assert not p.blocks(p.theta_threshold)


@pytest.mark.parametrize(
    "beta, p, expected",
    [
        (1.0, (1, 0.5), True),
        (1.0, (1, 1.5), False),
        (1 / math.sqrt(2), (1, 0), True),
    ],
)
def test_region_contains_examples(beta, p, expected):
    assert region_contains((0, 0), (2, 0), beta, p) is expected


def test_region_open_boundary():
    # on the Thales circle: the angle is exactly pi/2, which does not block
    assert not region_contains((0, 0), (2, 0), 1.0, (1, 1))


def test_region_degenerate_segment():
    with pytest.raises(GeometryError):
        region_contains((0, 0), (0, 0), 1.0, (1, 1))


@pytest.mark.parametrize("beta", BETAS)
def test_region_matches_angle_criterion(beta):
    rng = np.random.default_rng(int(beta * 1000))
    thr = angle_threshold(beta)
    checked = 0
    while checked < 1000:
        a, b, p = rng.uniform(-2, 2, size=(3, 2))
        d = np.hypot(*(a - b))
        if d < 1e-3 or min(np.hypot(*(p - a)), np.hypot(*(p - b))) < 1e-9:
            continue
        if region_boundary_distance(a, b, beta, p) <= 1e-6 * d:
            continue
        assert region_contains(a, b, beta, p) == (angle_at(p, a, b) > thr)
        checked += 1


@settings(max_examples=200, derandomize=True)
@given(coord, coord, coord, coord, coord, coord)
def test_symmetry(ax, ay, bx, by, cx, cy):
    a, b, c = (ax, ay), (bx, by), (cx, cy)
    if min(math.dist(a, c), math.dist(b, c), math.dist(a, b)) < 1e-6:
        return
    assert angle_at(c, a, b) == angle_at(c, b, a)
    for beta in BETAS:
        assert region_contains(a, b, beta, c) == region_contains(b, a, beta, c)


def test_lens_shrinks_with_beta():
    rng = np.random.default_rng(7)
    a, b = np.array([0.0, 0.0]), np.array([1.0, 0.0])
    betas = [0.1, 0.3, 0.5, 1 / math.sqrt(2), 0.9, 1.0]
    pts = rng.uniform(-0.2, 1.2, size=(5000, 2))
    for lo, hi in zip(betas, betas[1:]):
        for p in pts:
            if region_contains(a, b, lo, p):
                assert region_contains(a, b, hi, p)


def test_similarity_invariance():
    rng = np.random.default_rng(11)
    for _ in range(300):
        a, b, p = rng.uniform(-1, 1, size=(3, 2))
        scale, rot = rng.uniform(0.01, 100), rng.uniform(0, 2 * math.pi)
        shift = rng.uniform(-50, 50, size=2)
        R = np.array([[math.cos(rot), -math.sin(rot)], [math.sin(rot), math.cos(rot)]])
        ta, tb, tp = (scale * R @ v + shift for v in (a, b, p))
        assert angle_at(tp, ta, tb) == pytest.approx(angle_at(p, a, b), abs=1e-9)
        for beta in BETAS:
            if region_boundary_distance(a, b, beta, p) > 1e-6 * math.dist(a, b):
                assert region_contains(ta, tb, beta, tp) == region_contains(a, b, beta, p)


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _half_plane_inside(corners, p):
    """Independent oracle: p is left of (or on) every CCW edge."""
    pts = [np.asarray(c, float) for c in corners]
    area = sum(_cross(pts[i], pts[(i + 1) % 4]) for i in range(4))
    if area < 0:
        pts = pts[::-1]
    for i in range(4):
        e = pts[(i + 1) % 4] - pts[i]
        if _cross(e, np.asarray(p, float) - pts[i]) < -1e-12:
            return False
    return True


def test_diamond_corners():
    d = Diamond((0, 0), (1, 0), math.pi / 2)
    a, top, b, bottom = d.corners()
    # interior angle pi/2 at a: the apexes sit at height tan(pi/4) / 2
    assert top == pytest.approx((0.5, 0.5))
    assert bottom == pytest.approx((0.5, -0.5))
    assert angle_at(a, top, bottom) == pytest.approx(math.pi / 2)


@pytest.mark.parametrize(
    "p, expected",
    [
        ((0.5, 0.0), True),
        ((0.0, 0.0), True),
        ((1.0, 0.0), True),
        ((0.5, 0.26), True),
        ((0.5, 0.5), True),
        ((0.5, 0.51), False),
        ((0.25, 0.26), False),
        ((-0.01, 0.0), False),
    ],
)
def test_diamond_contains(p, expected):
    d = Diamond((0, 0), (1, 0), math.pi / 2)
    assert diamond_contains(d, p) is expected
    assert _half_plane_inside(d.corners(), p) is expected


def test_diamond_against_half_planes_random():
    rng = np.random.default_rng(3)
    for _ in range(200):
        a, b = rng.uniform(-1, 1, size=(2, 2))
        d = Diamond(a, b, rng.uniform(0.1, 3.0))
        for p in rng.uniform(-1.5, 1.5, size=(20, 2)):
            assert diamond_contains(d, p, tol=0) == _half_plane_inside(d.corners(), p)


def test_diamond_validation():
    with pytest.raises(GeometryError):
        Diamond((0, 0), (0, 0), 1.0)
    with pytest.raises(ValueError):
        Diamond((0, 0), (1, 0), math.pi)
