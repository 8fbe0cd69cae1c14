"""Growth experiments on fractal paths and the upper-bound exponent curve."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .dilation import pair_dilation
from .fractal import FractalSpec, Orientation, fractal_unit_dilation, generate_fractal, skeleton_mismatch
from .routing import SQRT3_2, dilation_upper_bound, greedy_route, upper_exponent
from .skeleton import path_graph


class LemmaPreconditionError(RuntimeError):
    """The fractal path is not the skeleton of its own vertices."""

    def __init__(self, depth: int, extra, missing):
        self.depth, self.extra, self.missing = depth, list(extra), list(missing)
        super().__init__(
            f"skeleton differs from the path at depth {depth}: "
            f"extra edges {self.extra[:20]}, missing edges {self.missing[:20]}"
            + (" (truncated)" if max(len(self.extra), len(self.missing)) > 20 else "")
        )


@dataclass(frozen=True)
class ExperimentRow:
    depth: int
    n: int
    beta: float
    theta: float
    dilation: float
    route_length: float
    upper_bound: float
    predicted: float

    def as_dict(self) -> dict:
        return asdict(self)


FIELDS = tuple(ExperimentRow.__dataclass_fields__)


def run_growth_experiment(theta: float, beta: float, k_max: int, orientation=Orientation.ALTERNATING) -> list[ExperimentRow]:
    """Measure endpoint dilation of P(theta, k) for k = 1..k_max.

    At every depth the beta-skeleton is rebuilt by brute force and must equal
    the path; otherwise :class:`LemmaPreconditionError` lists the offending
    edges. Greedy routing needs beta <= 1; for beta > 1 the route length is
    reported as NaN and the bound as infinity.
    """
    if k_max < 0:
        raise ValueError(f"k_max must be non-negative, got {k_max}")
    if k_max == 0:
        return []
    first = generate_fractal(FractalSpec(theta, 1, orientation))
    extra, missing = skeleton_mismatch(first, beta)
    if extra or missing:
        raise LemmaPreconditionError(1, extra, missing)

    unit = fractal_unit_dilation(theta)
    rows = []
    for k in range(1, k_max + 1):
        path = first if k == 1 else generate_fractal(FractalSpec(theta, k, orientation))
        ps = path.pointset()
        if k > 1:
            extra, missing = skeleton_mismatch(path, beta)
            if extra or missing:
                raise LemmaPreconditionError(k, extra, missing)
        g = path_graph(ps)
        n = len(ps)
        dil = pair_dilation(g, ps, 0, n - 1)
        if beta <= 1:
            route = greedy_route(g, ps, beta, 0, n - 1).length
            bound = dilation_upper_bound(n, beta)
        else:
            route, bound = math.nan, math.inf
        rows.append(ExperimentRow(k, n, beta, theta, dil, route, bound, unit**k))
    return rows


def fit_growth_exponent(rows) -> float:
    """Least-squares slope of log(dilation) against log(n)."""
    if len(rows) < 2:
        return math.nan
    x = np.log([r.n for r in rows])
    y = np.log([r.dilation for r in rows])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def run_exponent_curve(beta_min: float, beta_max: float, steps: int) -> list[tuple[float, float]]:
    """Samples of the upper-bound exponent on an even beta grid."""
    if not 0 < beta_min < beta_max < SQRT3_2:
        raise ValueError(f"need 0 < beta_min < beta_max < sqrt(3)/2, got [{beta_min}, {beta_max}]")
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps}")
    return [(float(b), upper_exponent(float(b))) for b in np.linspace(beta_min, beta_max, int(steps))]
