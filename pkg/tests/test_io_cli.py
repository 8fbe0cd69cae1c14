import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from betaskel import io
from betaskel.cli import main
from betaskel.skeleton import PointSet, build_skeleton

finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


@settings(max_examples=100, derandomize=True)
@given(st.lists(st.tuples(finite, finite), min_size=1, max_size=30, unique=True))
def test_csv_round_trip_exact(pts):
    try:
        ps = PointSet(pts)
    except ValueError:
        return  # near-duplicates
    back = io.parse_points_csv(io.format_points_csv(ps))
    assert np.array_equal(back.coords, ps.coords)


def test_csv_comments_and_errors():
    ps = io.parse_points_csv("# header\n0,0\n\n1.5, 2  # trailing\n")
    assert ps.coords.tolist() == [[0.0, 0.0], [1.5, 2.0]]
    with pytest.raises(ValueError):
        io.parse_points_csv("1,2,3\n")


def test_graph_json_round_trip():
    ps = PointSet(np.random.default_rng(0).random((15, 2)))
    g = build_skeleton(ps, 1.0)
    text = io.format_graph_json(ps, g)
    data = json.loads(text)
    assert set(data) == {"vertices", "edges"}
    ps2, g2 = io.parse_graph_json(text)
    assert ps2 == ps and g2.edges == g.edges
    with pytest.raises(ValueError):
        io.parse_graph_json('{"vertices": [[0, 0]]}')


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_fractal_and_skeleton(tmp_path, capsys):
    pts = tmp_path / "p.csv"
    code, _, _ = run(capsys, "generate", "fractal", "--theta", "pi/4", "--depth", "2", "--output", str(pts), "--check")
    assert code == 0
    assert len(pts.read_text().splitlines()) == 26
    code, out, _ = run(capsys, "skeleton", "--input", str(pts), "--beta", "1")
    assert code == 0
    assert json.loads(out)["edges"] == [[i, i + 1] for i in range(25)]


def test_generate_kinds(capsys):
    code, out, _ = run(capsys, "generate", "grid", "--n", "3")
    assert code == 0 and len(out.splitlines()) == 9
    code, out, _ = run(capsys, "generate", "collinear", "--n", "4", "--format", "json")
    assert json.loads(out)["edges"] == [[0, 1], [1, 2], [2, 3]]
    code, out1, _ = run(capsys, "generate", "random", "--n", "5", "--seed", "3")
    code, out2, _ = run(capsys, "generate", "random", "--n", "5", "--seed", "3")
    assert code == 0 and out1 == out2


def test_check_mode_rejects_unseeded(capsys):
    code, _, err = run(capsys, "generate", "random", "--n", "5", "--check")
    assert code == 1 and "seed" in err


def test_exit_codes(tmp_path, capsys):
    assert run(capsys, "skeleton", "--input", str(tmp_path / "missing.csv"), "--beta", "1")[0] == 3
    assert run(capsys, "generate", "fractal", "--theta", "2", "--depth", "1")[0] == 1
    assert run(capsys, "generate", "nonsense")[0] == 1
    code, _, err = run(capsys, "experiment", "growth", "--theta", "1.0", "--beta", "1/sqrt(2)", "--k-max", "2")
    assert code == 2 and "extra edges" in err


def test_mst_dilation_route(tmp_path, capsys):
    pts = tmp_path / "r.csv"
    run(capsys, "generate", "random", "--n", "30", "--seed", "5", "--output", str(pts))
    code, out, _ = run(capsys, "mst", "--input", str(pts))
    assert code == 0 and len(json.loads(out)["edges"]) == 29
    graph = tmp_path / "g.json"
    run(capsys, "skeleton", "--input", str(pts), "--beta", "0.5", "--output", str(graph))
    code, out, _ = run(capsys, "dilation", "--input", str(graph))
    rep = json.loads(out)
    assert code == 0 and rep["max_dilation"] >= 1 and not rep["disconnected"]
    code, out, _ = run(capsys, "dilation", "--input", str(graph), "--source", "0", "--target", "1")
    assert json.loads(out)["dilation"] >= 1
    code, out, _ = run(capsys, "route", "--input", str(pts), "--beta", "0.5", "--source", "0", "--target", "29", "--check")
    res = json.loads(out)
    assert code == 0
    assert res["path"][0] == 0 and res["path"][-1] == 29
    assert res["length"] == pytest.approx(res["boundary_length"], abs=1e-9)
    assert res["route_dilation"] <= res["upper_bound"]


def test_dilation_unreachable(tmp_path, capsys):
    graph = tmp_path / "g.json"
    graph.write_text(json.dumps({"vertices": [[0, 0], [1, 0], [3, 3]], "edges": [[0, 1]]}))
    code, out, _ = run(capsys, "dilation", "--input", str(graph), "--source", "0", "--target", "2")
    assert code == 0 and json.loads(out) == {"pair": [0, 2], "dilation": None, "unreachable": True}


def test_experiments_deterministic(capsys):
    args = ("experiment", "growth", "--theta", "pi/4", "--beta", "1", "--k-max", "3", "--check")
    code, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert code == 0 and out1 == out2
    lines = out1.splitlines()
    assert lines[0].startswith("depth,n,beta,theta,dilation")
    assert len(lines) == 5 and lines[-1].startswith("# fitted_exponent=")
    code, out, _ = run(capsys, "experiment", "exponent-curve", "--beta-min", "0.1", "--beta-max", "0.8", "--steps", "8")
    assert code == 0 and len(out.splitlines()) == 9
    code, out, _ = run(capsys, "experiment", "exponent-curve", "--format", "svg")
    assert out.startswith("<svg")


def test_render(tmp_path, capsys):
    pts = tmp_path / "f.json"
    run(capsys, "generate", "fractal", "--theta", "pi/4", "--depth", "2", "--format", "json", "--output", str(pts))
    out_svg = tmp_path / "f.svg"
    code, _, _ = run(capsys, "render", "--input", str(pts), "--theta", "pi/4", "--diamonds", "1", "--output", str(out_svg))
    text = out_svg.read_text()
    assert code == 0 and text.count("<polygon") == 5 and text.count("<circle") == 26
