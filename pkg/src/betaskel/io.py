"""Flat-file formats: point CSV and graph JSON."""

from __future__ import annotations

import json

from .skeleton import PointSet, SkeletonGraph, as_pointset


def format_points_csv(ps) -> str:
    # repr() is the shortest string that round-trips a float exactly
    return "".join(f"{x!r},{y!r}\n" for x, y in as_pointset(ps).coords.tolist())


def parse_points_csv(text: str) -> PointSet:
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'x,y', got {line!r}")
        pts.append((float(fields[0]), float(fields[1])))
    return PointSet(pts)


def write_points_csv(path, ps) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_points_csv(ps))


def read_points_csv(path) -> PointSet:
    with open(path, encoding="utf-8") as fh:
        return parse_points_csv(fh.read())


def graph_to_dict(ps, g: SkeletonGraph) -> dict:
    return {
        "vertices": as_pointset(ps).coords.tolist(),
        "edges": [list(e) for e in g.edges],
    }


def format_graph_json(ps, g: SkeletonGraph) -> str:
    return json.dumps(graph_to_dict(ps, g), indent=1) + "\n"


def parse_graph_json(text: str) -> tuple[PointSet, SkeletonGraph]:
    data = json.loads(text)
    try:
        ps = PointSet(data["vertices"])
        g = SkeletonGraph.from_edges(ps, data["edges"])
    except KeyError as exc:
        raise ValueError(f"graph JSON lacks field {exc}") from None
    return ps, g


def read_graph_json(path) -> tuple[PointSet, SkeletonGraph]:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_json(fh.read())
