import math

import numpy as np
import pytest

from betaskel.experiments import (
    LemmaPreconditionError,
    fit_growth_exponent,
    run_exponent_curve,
    run_growth_experiment,
)
from betaskel.routing import bound_exponents

L1 = 5 / (3 + math.sqrt(2))


def test_growth_rows_pi_over_four():
    rows = run_growth_experiment(math.pi / 4, 1.0, 3)
    assert [r.depth for r in rows] == [1, 2, 3]
    assert [r.n for r in rows] == [6, 26, 126]
    for r, quoted in zip(rows, [1.13270, 1.28300, 1.45327]):
        assert r.dilation == pytest.approx(L1**r.depth, rel=1e-9)
        assert r.dilation == pytest.approx(quoted, abs=1e-4)
        assert r.dilation == pytest.approx(r.predicted, rel=1e-9)
        assert r.dilation <= r.upper_bound
        # the only s-t route in a path graph is the path itself
        assert r.route_length == pytest.approx(r.dilation, rel=1e-12)


def test_growth_fit():
    rows = run_growth_experiment(math.pi / 4, 1.0, 5)
    _, lower = bound_exponents(0.5, math.pi / 4)
    assert fit_growth_exponent(rows) == pytest.approx(lower, rel=0.05)


def test_growth_empty():
    assert run_growth_experiment(math.pi / 4, 1.0, 0) == []
    assert math.isnan(fit_growth_exponent([]))


def test_growth_precondition_failure():
    with pytest.raises(LemmaPreconditionError) as info:
        run_growth_experiment(1.0, 1 / math.sqrt(2), 2)
    assert info.value.depth == 1 and info.value.extra and not info.value.missing


def test_growth_beta_above_one():
    rows = run_growth_experiment(0.6, 1.5, 2)
    assert math.isnan(rows[0].route_length) and rows[0].upper_bound == math.inf
    assert rows[1].dilation == pytest.approx(rows[1].predicted, rel=1e-9)


def test_exponent_curve():
    curve = run_exponent_curve(0.01, 0.866, 60)
    betas, cs = np.array(curve).T
    assert np.all(np.diff(betas) > 0) and np.all(np.diff(cs) > 0)
    assert cs[0] == pytest.approx(0.0, abs=1e-3)
    assert cs[-1] == pytest.approx(1.0, abs=1e-3)
    mid = dict(run_exponent_curve(0.5, 1 / math.sqrt(2), 2))
    assert mid[1 / math.sqrt(2)] == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("lo, hi", [(0.0, 0.5), (0.5, 0.4), (0.1, 0.9)])
def test_exponent_curve_range(lo, hi):
    with pytest.raises(ValueError):
        run_exponent_curve(lo, hi, 10)
