"""Command-line interface.

Exit codes: 0 success, 1 invalid parameters, 2 lemma precondition failure,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import io
from .dilation import graph_dilation, pair_dilation
from .experiments import (
    FIELDS,
    LemmaPreconditionError,
    fit_growth_exponent,
    run_exponent_curve,
    run_growth_experiment,
)
from .fractal import FractalSpec, Orientation, generate_fractal, verify_diamond_containment
from .geom import GeometryError
from .routing import boundary_length, dilation_upper_bound, greedy_route, prune_tree, walk_length
from .skeleton import PointSet, SkeletonGraph, build_k_skeleton, euclidean_mst, path_graph
from .svg import fractal_diamonds, render_curve_svg, render_graph_svg

EXIT_OK, EXIT_PARAM, EXIT_LEMMA, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    """An invariant verified under ``--check`` does not hold."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_NAMES = {"pi": math.pi, "sqrt": math.sqrt}


def _number(text: str) -> float:
    """Float literal or simple expression such as ``pi/4`` or ``1/sqrt(2)``."""
    expr = text.strip().lower()
    stripped = expr.replace("sqrt", "").replace("pi", "")
    if not expr or not set(stripped) <= set("0123456789.+-*/() e"):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    try:
        return float(eval(expr, {"__builtins__": {}}, _NAMES))
    except Exception:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _common(p: argparse.ArgumentParser, *names: str) -> None:
    flags = {
        "beta": dict(type=_number, help="skeleton parameter beta"),
        "theta": dict(type=_number, help="fractal construction angle in radians (pi allowed)"),
        "depth": dict(type=int, help="fractal depth"),
        "k": dict(type=int, default=1, help="k for the k-beta-skeleton"),
        "seed": dict(type=int, help="random seed"),
        "input": dict(help="input file (point CSV or graph JSON)"),
        "output": dict(help="output file (default: stdout)"),
        "format": dict(choices=("csv", "json", "svg"), help="output format"),
        "check": dict(action="store_true", help="test mode: require seeds, verify invariants"),
    }
    for name in names:
        p.add_argument(f"--{name}", **flags[name])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="betaskel", description="Beta-skeletons, fractal paths, dilation and greedy routing.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="generate a point set")
    p.add_argument("kind", choices=("fractal", "random", "grid", "collinear"))
    _common(p, "theta", "depth", "seed", "output", "format", "check")
    p.add_argument("--n", type=int, default=20, help="point count (grid: points per side)")
    p.add_argument("--orientation", choices=[o.value for o in Orientation], default="alternating")

    p = sub.add_parser("skeleton", help="build the (k-)beta-skeleton of a point set")
    _common(p, "input", "output", "beta", "k", "format", "check")

    p = sub.add_parser("mst", help="Euclidean minimum spanning tree")
    _common(p, "input", "output", "format", "check")

    p = sub.add_parser("dilation", help="graph dilation, or one pair's dilation")
    _common(p, "input", "output", "beta", "k", "check")
    p.add_argument("--source", type=int)
    p.add_argument("--target", type=int)

    p = sub.add_parser("route", help="greedy route between two vertices")
    _common(p, "input", "output", "beta", "check")
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int, required=True)

    p = sub.add_parser("experiment", help="reproduce growth curves")
    esub = p.add_subparsers(dest="experiment", required=True, parser_class=_Parser)
    e = esub.add_parser("growth", help="endpoint dilation of fractal paths by depth")
    _common(e, "theta", "beta", "output", "format", "check")
    e.add_argument("--k-max", "--depth", dest="k_max", type=int, required=True)
    e.add_argument("--orientation", choices=[o.value for o in Orientation], default="alternating")
    e = esub.add_parser("exponent-curve", help="upper-bound exponent as a function of beta")
    _common(e, "output", "format", "check")
    e.add_argument("--beta-min", type=_number, default=0.01)
    e.add_argument("--beta-max", type=_number, default=0.866)
    e.add_argument("--steps", type=int, default=50)

    p = sub.add_parser("render", help="render a point CSV or graph JSON as SVG")
    _common(p, "input", "output", "theta", "check")
    p.add_argument("--diamonds", type=int, metavar="LEVEL", help="overlay fractal diamonds at this level")
    return parser


def _read_input(path):
    if path is None:
        raise UsageError("--input is required")
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return io.parse_graph_json(text)
    return io.parse_points_csv(text), None


def _emit(text: str, output) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def _graph_out(ps, g, fmt):
    if fmt == "svg":
        return render_graph_svg(ps.coords, g.edges)
    if fmt == "csv":
        return "".join(f"{i},{j}\n" for i, j in g.edges)
    return io.format_graph_json(ps, g)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def cmd_generate(args):
    fmt = args.format or "csv"
    edges = []
    if args.kind == "fractal":
        _need(args, "theta", "depth")
        path = generate_fractal(FractalSpec(args.theta, args.depth, args.orientation))
        ps = path.pointset()
        edges = path_graph(ps).edges
        if args.check and not verify_diamond_containment(path):
            raise CheckFailed("fractal path leaves its diamond")
    elif args.kind == "random":
        if args.seed is None and args.check:
            raise UsageError("--check requires --seed for random point sets")
        rng = np.random.default_rng(args.seed)
        ps = PointSet(rng.random((args.n, 2)))
    elif args.kind == "grid":
        g = np.arange(args.n, dtype=float)
        xx, yy = np.meshgrid(g, g)
        ps = PointSet(np.column_stack([xx.ravel(), yy.ravel()]))
    else:
        ps = PointSet([(float(i), 0.0) for i in range(args.n)])
        edges = path_graph(ps).edges
    if fmt == "csv":
        return io.format_points_csv(ps)
    return _graph_out(ps, SkeletonGraph.from_edges(ps, edges), fmt)


def cmd_skeleton(args):
    _need(args, "beta")
    ps, _ = _read_input(args.input)
    return _graph_out(ps, build_k_skeleton(ps, args.beta, args.k), args.format or "json")


def cmd_mst(args):
    ps, _ = _read_input(args.input)
    return _graph_out(ps, euclidean_mst(ps), args.format or "json")


def cmd_dilation(args):
    ps, g = _read_input(args.input)
    if g is None:
        _need(args, "beta")
        g = build_k_skeleton(ps, args.beta, args.k)
    if (args.source is None) != (args.target is None):
        raise UsageError("--source and --target go together")
    if args.source is not None:
        d = pair_dilation(g, ps, args.source, args.target)
        reachable = math.isfinite(d)
        return _dump({"pair": [args.source, args.target], "dilation": d if reachable else None, "unreachable": not reachable})
    rep = graph_dilation(g, ps)
    return _dump({
        "max_dilation": rep.max_dilation,
        "witness_pair": list(rep.witness_pair) if rep.witness_pair else None,
        "disconnected": rep.disconnected,
        "n": len(ps),
        "edges": len(g.edges),
    })


def cmd_route(args):
    _need(args, "beta")
    ps, g = _read_input(args.input)
    if g is None:
        g = build_k_skeleton(ps, args.beta, 1)
    res = greedy_route(g, ps, args.beta, args.source, args.target)
    pruned, walk = prune_tree(res.tree, ps)

    d = ps.dist(args.source, args.target)
    out = {
        "path": res.path,
        "length": res.length,
        "boundary_length": res.boundary_length,
        "triangles": len(res.tree),
        "leaves": len(res.tree.leaves()),
        "pruned_walk": walk,
        "pruned_length": walk_length(ps, walk),
        "pruned_boundary_length": boundary_length(pruned, ps),
        "pruned_leaves": len(pruned.leaves()),
        "route_dilation": res.length / d,
        "upper_bound": dilation_upper_bound(len(ps), args.beta),
    }
    if args.check:
        if abs(res.length - res.boundary_length) > 1e-9:
            raise CheckFailed(f"route length {res.length!r} != boundary length {res.boundary_length!r}")
        if out["pruned_leaves"] > 2 * len(ps):
            raise CheckFailed(f"pruned tree has {out['pruned_leaves']} leaves for {len(ps)} points")
        if out["pruned_length"] > out["pruned_boundary_length"] + 1e-9:
            raise CheckFailed("pruned walk is longer than the pruned boundary length")
    return _dump(out)


def cmd_experiment(args):
    if args.experiment == "growth":
        _need(args, "theta", "beta")
        rows = run_growth_experiment(args.theta, args.beta, args.k_max, args.orientation)
        slope = fit_growth_exponent(rows)
        if args.check:
            for r in rows:
                ok = r.n == 5**r.depth + 1 and r.dilation <= r.upper_bound
                ok = ok and abs(r.dilation - r.predicted) <= 1e-6 * r.predicted
                if not ok:
                    raise CheckFailed(f"row for depth {r.depth} violates the growth invariants: {r}")
        if args.format == "json":
            return _dump({"rows": [r.as_dict() for r in rows], "fitted_exponent": slope})
        lines = [",".join(FIELDS)]
        lines += [",".join(repr(v) for v in r.as_dict().values()) for r in rows]
        lines.append(f"# fitted_exponent={slope!r}")
        return "\n".join(lines) + "\n"

    curve = run_exponent_curve(args.beta_min, args.beta_max, args.steps)
    if args.format == "svg":
        b, c = zip(*curve)
        return render_curve_svg(b, c, xlabel="beta", ylabel="exponent")
    return "beta,upper_c\n" + "".join(f"{b!r},{c!r}\n" for b, c in curve)


def cmd_render(args):
    ps, g = _read_input(args.input)
    diamonds = []
    if args.diamonds is not None:
        _need(args, "theta")
        diamonds = fractal_diamonds(ps.coords, args.theta, args.diamonds)
    return render_graph_svg(ps.coords, g.edges if g is not None else (), diamonds)


COMMANDS = {
    "generate": cmd_generate,
    "skeleton": cmd_skeleton,
    "mst": cmd_mst,
    "dilation": cmd_dilation,
    "route": cmd_route,
    "experiment": cmd_experiment,
    "render": cmd_render,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text = COMMANDS[args.command](args)
        _emit(text, args.output)
    except (LemmaPreconditionError, CheckFailed) as exc:
        print(f"betaskel: lemma precondition failed: {exc}", file=sys.stderr)
        return EXIT_LEMMA
    except (UsageError, ValueError, GeometryError, IndexError) as exc:
        print(f"betaskel: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except OSError as exc:
        print(f"betaskel: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
