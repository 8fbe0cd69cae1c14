"""Beta-skeletons, fractal paths with unbounded dilation, and greedy routing."""

from .dilation import UNREACHABLE, DilationReport, Unreachable, graph_dilation, pair_dilation
from .experiments import (
    ExperimentRow,
    LemmaPreconditionError,
    fit_growth_exponent,
    run_exponent_curve,
    run_growth_experiment,
)
from .fractal import (
    FractalPath,
    FractalSpec,
    Orientation,
    fractal_unit_dilation,
    generate_fractal,
    max_theta_for_beta,
    skeleton_mismatch,
    verify_diamond_containment,
    verify_is_skeleton,
)
from .geom import (
    AngleParams,
    Diamond,
    GeometryError,
    Point,
    angle_at,
    angle_threshold,
    diamond_contains,
    region_contains,
)
from .routing import (
    RouteResult,
    RoutingError,
    TreeStructureError,
    TriangleTree,
    bound_exponents,
    boundary_length,
    dilation_upper_bound,
    greedy_route,
    prune_steps,
    prune_tree,
    single_leaf_bound,
    spiral_chain,
    tree_length_bound,
)
from .skeleton import (
    PointSet,
    SkeletonGraph,
    build_k_skeleton,
    build_skeleton,
    edge_in_skeleton,
    euclidean_mst,
    path_graph,
)

__version__ = "0.1.0"
