"""Greedy recursive routing on beta-skeletons and the triangle-tree bounds.

To route from s to t: use edge st if present, otherwise pick the point r
seeing st under the largest angle, route s->r and r->t and concatenate.
Each such split is recorded as a triangle (s, r, t); the triangles form a
binary tree whose boundary length bounds the length of the route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .geom import angle_threshold, angles_at
from .skeleton import PointSet, SkeletonGraph, as_pointset

SQRT3_2 = math.sqrt(3.0) / 2.0


class RoutingError(RuntimeError):
    """The recursion cannot make progress (graph is not a beta<=1 skeleton)."""


class TreeStructureError(ValueError):
    pass


@dataclass
class TriangleTree:
    """Binary tree of triangles ``(a, r, b)``; ``a-b`` is the hypotenuse.

    Node 0 is the root when the tree is non-empty. ``left[i]`` is the child
    hanging on side ``a-r`` and ``right[i]`` the child on ``r-b``, or -1.
    """

    root_pair: tuple
    a: list = field(default_factory=list)
    r: list = field(default_factory=list)
    b: list = field(default_factory=list)
    parent: list = field(default_factory=list)
    left: list = field(default_factory=list)
    right: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.a)

    def add(self, a: int, r: int, b: int, parent: int = -1, side: str = "") -> int:
        i = len(self.a)
        self.a.append(a)
        self.r.append(r)
        self.b.append(b)
        self.parent.append(parent)
        self.left.append(-1)
        self.right.append(-1)
        if parent >= 0:
            if side == "left":
                self.left[parent] = i
            elif side == "right":
                self.right[parent] = i
            else:
                raise TreeStructureError(f"unknown side {side!r}")
        return i

    def triangle(self, i: int) -> tuple:
        return self.a[i], self.r[i], self.b[i]

    def is_leaf(self, i: int) -> bool:
        return self.left[i] < 0 and self.right[i] < 0

    def preorder(self) -> Iterator[int]:
        if not self.a:
            return
        stack = [0]
        while stack:
            i = stack.pop()
            yield i
            if self.right[i] >= 0:
                stack.append(self.right[i])
            if self.left[i] >= 0:
                stack.append(self.left[i])

    def leaves(self) -> list[int]:
        """Leaf triangles in tree (left-to-right) order."""
        return [i for i in self.preorder() if self.is_leaf(i)]

    def leaf_vertices(self) -> list[int]:
        return [self.r[i] for i in self.leaves()]

    def walk(self) -> list[int]:
        """Vertex sequence s .. t read off the tree in order."""
        s, t = self.root_pair
        out = [s]
        if self.a:
            stack = [(0, False)]
            while stack:
                i, expanded = stack.pop()
                if expanded:
                    out.append(self.r[i])
                    continue
                if self.right[i] >= 0:
                    stack.append((self.right[i], False))
                stack.append((i, True))
                if self.left[i] >= 0:
                    stack.append((self.left[i], False))
        out.append(t)
        return out

    def validate(self) -> None:
        """Raise :class:`TreeStructureError` unless sides and links agree."""
        if not self.a:
            return
        if (self.a[0], self.b[0]) != tuple(self.root_pair) or self.parent[0] != -1:
            raise TreeStructureError("root triangle does not span the root pair")
        seen = 0
        for i in self.preorder():
            seen += 1
            for child, side in ((self.left[i], (self.a[i], self.r[i])), (self.right[i], (self.r[i], self.b[i]))):
                if child < 0:
                    continue
                if self.parent[child] != i:
                    raise TreeStructureError(f"node {child} has wrong parent")
                if (self.a[child], self.b[child]) != side:
                    raise TreeStructureError(f"node {child} hypotenuse does not match parent side")
        if seen != len(self):
            raise TreeStructureError("tree contains unreachable nodes")


@dataclass(frozen=True)
class RouteResult:
    path: list
    length: float
    tree: TriangleTree
    boundary_length: float


def walk_length(ps, walk) -> float:
    ps = as_pointset(ps)
    idx = np.asarray(walk, dtype=int)
    if len(idx) < 2:
        return 0.0
    diff = np.diff(ps.coords[idx], axis=0)
    return float(np.hypot(diff[:, 0], diff[:, 1]).sum())


def boundary_length(tree: TriangleTree, ps) -> float:
    """dist(s, t) plus, per triangle, its perimeter minus twice its hypotenuse."""
    ps = as_pointset(ps)
    s, t = tree.root_pair
    total = ps.dist(s, t)
    if not len(tree):
        return total
    c = ps.coords
    a, r, b = (np.asarray(v, dtype=int) for v in (tree.a, tree.r, tree.b))
    ar = np.hypot(*(c[a] - c[r]).T)
    rb = np.hypot(*(c[r] - c[b]).T)
    ab = np.hypot(*(c[a] - c[b]).T)
    return float(total + np.sum(ar + rb - ab))


def _witness(coords: np.ndarray, u: int, v: int) -> tuple[int, float]:
    ang = angles_at(coords, coords[u], coords[v])
    ang[u] = ang[v] = -1.0
    r = int(np.argmax(ang))
    return r, float(ang[r])


def greedy_route(g: SkeletonGraph, ps, beta: float, s: int, t: int) -> RouteResult:
    """Route from s to t by recursive splitting at the widest-angle witness.

    ``g`` is expected to be the beta-skeleton of ``ps``. Witness ties go to
    the lowest index. Sub-routes are not memoised, so every split appears in
    the returned tree.
    """
    if beta > 1:
        raise ValueError("greedy routing only terminates for beta <= 1")
    angle_threshold(beta)
    ps = as_pointset(ps)
    n = len(ps)
    if s == t:
        raise ValueError("source and target must differ")
    if not (0 <= s < n and 0 <= t < n):
        raise IndexError(f"pair ({s}, {t}) out of range for {n} points")
    coords = ps.coords
    tree = TriangleTree((s, t))
    path = [s]
    stack = [(s, t, -1, "")]
    while stack:
        u, v, parent, side = stack.pop()
        if g.has_edge(u, v):
            path.append(v)
            continue
        r, ang = _witness(coords, u, v)
        d = ps.dist(u, v)
        if not (ps.dist(u, r) < d and ps.dist(r, v) < d):
            raise RoutingError(
                f"no shortening witness for ({u}, {v}); best angle {ang:.6g} at {r}"
            )
        node = tree.add(u, r, v, parent, side)
        stack.append((r, v, node, "right"))
        stack.append((u, r, node, "left"))
    return RouteResult(path, walk_length(ps, path), tree, boundary_length(tree, ps))


@dataclass(frozen=True)
class PruneStep:
    vertex: int
    tree: TriangleTree
    walk: list


def _subtree(tree: TriangleTree, root: int) -> list[int]:
    out, stack = [], [root]
    while stack:
        i = stack.pop()
        out.append(i)
        stack.extend(c for c in (tree.left[i], tree.right[i]) if c >= 0)
    return out


def _ancestors(tree: TriangleTree, i: int) -> list[int]:
    chain = [i]
    while tree.parent[chain[-1]] >= 0:
        chain.append(tree.parent[chain[-1]])
    return chain


def _between(tree: TriangleTree, first: int, last: int) -> set[int]:
    """Nodes of subtrees hanging off the tree path between two leaves."""
    up1, up2 = _ancestors(tree, first), _ancestors(tree, last)
    on2 = set(up2)
    lca = next(i for i in up1 if i in on2)
    removed: set[int] = set()
    for chain, keep_side in ((up1, "left"), (up2, "right")):
        child = chain[0]
        for node in chain[1:]:
            if node == lca:
                break
            if keep_side == "left" and tree.left[node] == child and tree.right[node] >= 0:
                removed.update(_subtree(tree, tree.right[node]))
            if keep_side == "right" and tree.right[node] == child and tree.left[node] >= 0:
                removed.update(_subtree(tree, tree.left[node]))
            child = node
    return removed


def _compact(tree: TriangleTree, removed: set[int]) -> tuple[TriangleTree, dict]:
    keep = [i for i in tree.preorder() if i not in removed]
    remap = {old: new for new, old in enumerate(keep)}
    out = TriangleTree(tuple(tree.root_pair))
    for old in keep:
        out.a.append(tree.a[old])
        out.r.append(tree.r[old])
        out.b.append(tree.b[old])
        out.parent.append(remap.get(tree.parent[old], -1))
        out.left.append(remap.get(tree.left[old], -1))
        out.right.append(remap.get(tree.right[old], -1))
    return out, remap


def prune_steps(tree: TriangleTree, ps=None) -> Iterator[PruneStep]:
    """Yield the successive (tree, walk) states of the leaf-pruning process.

    While some vertex is the apex of three or more leaf triangles, take the
    first such vertex in leaf order, drop every subtree hanging between its
    first and last leaf, and cut the walk between those two visits.
    """
    tree.validate()
    # walk tokens: [vertex, set of leaf nodes visited at this position]
    tokens: list[list] = [[tree.root_pair[0], set()]]
    if len(tree):
        stack = [(0, False)]
        while stack:
            i, expanded = stack.pop()
            if expanded:
                tokens.append([tree.r[i], {i} if tree.is_leaf(i) else set()])
                continue
            if tree.right[i] >= 0:
                stack.append((tree.right[i], False))
            stack.append((i, True))
            if tree.left[i] >= 0:
                stack.append((tree.left[i], False))
    tokens.append([tree.root_pair[1], set()])
    tree = TriangleTree(tuple(tree.root_pair), *(list(x) for x in (tree.a, tree.r, tree.b, tree.parent, tree.left, tree.right)))

    while True:
        token_of = {leaf: k for k, (_, leaves) in enumerate(tokens) for leaf in leaves}
        order = tree.leaves()
        counts: dict[int, list[int]] = {}
        for leaf in order:
            counts.setdefault(tree.r[leaf], []).append(leaf)
        target = next((v for v, ls in counts.items() if len(ls) >= 3), None)
        if target is None:
            return
        first, last = counts[target][0], counts[target][-1]
        ta, tb = token_of[first], token_of[last]
        if ta > tb:
            raise TreeStructureError("walk does not visit leaves in tree order")
        removed = _between(tree, first, last)
        merged = (tokens[ta][1] | tokens[tb][1]) - removed
        stray = {leaf for _, ls in tokens[ta + 1 : tb] for leaf in ls} - removed
        if stray:
            raise TreeStructureError(f"leaves {sorted(stray)} lie on the cut walk but stay in the tree")
        tokens = tokens[:ta] + [[target, merged]] + tokens[tb + 1 :]
        tree, remap = _compact(tree, removed)
        tokens = [[v, {remap[leaf] for leaf in ls}] for v, ls in tokens]
        yield PruneStep(target, tree, [v for v, _ in tokens])


def prune_tree(tree: TriangleTree, ps=None) -> tuple[TriangleTree, list[int]]:
    """Prune until every vertex is the apex of at most two leaf triangles.

    Returns the pruned tree and an s-t walk whose length is at most the
    pruned tree's boundary length. A tree that needs no pruning comes back
    unchanged together with its in-order walk.
    """
    result_tree, result_walk = tree, tree.walk()
    for step in prune_steps(tree, ps):
        result_tree, result_walk = step.tree, step.walk
    return result_tree, result_walk


def _check_obtuse(theta: float) -> None:
    if not math.pi / 2 < theta <= math.pi:
        raise ValueError(f"theta must lie in (pi/2, pi], got {theta}")


def single_leaf_bound(theta: float) -> float:
    """Supremum of |T| for unit one-leaf trees with apex angles >= theta."""
    _check_obtuse(theta)
    return -1.0 / math.cos(theta)


def tree_length_bound(theta: float, leaf_count: int) -> float:
    """``(-1/cos(theta)) ** (1 + floor(log2(leaf_count)))``."""
    _check_obtuse(theta)
    if leaf_count < 1 or int(leaf_count) != leaf_count:
        raise ValueError(f"leaf_count must be a positive integer, got {leaf_count}")
    return single_leaf_bound(theta) ** (int(leaf_count).bit_length())


def dilation_upper_bound(n: int, beta: float) -> float:
    """Dilation bound for beta-skeletons on ``n`` points, 0 < beta <= 1.

    The triangle-tree bound with ``2n`` leaves below sqrt(3)/2, and the
    spanning-tree bound ``n - 1`` from sqrt(3)/2 up to 1.
    """
    if not 0 < beta <= 1:
        raise ValueError(f"beta must lie in (0, 1], got {beta}")
    if n < 1 or int(n) != n:
        raise ValueError(f"n must be a positive integer, got {n}")
    if beta >= SQRT3_2:
        return float(n - 1)
    return tree_length_bound(math.pi - math.asin(beta), 2 * int(n))


def upper_exponent(beta: float) -> float:
    if not 0 < beta < SQRT3_2:
        raise ValueError(f"beta must lie in (0, sqrt(3)/2), got {beta}")
    return -0.5 * math.log2(1.0 - beta * beta)


def lower_exponent(theta: float) -> float:
    from .fractal import fractal_unit_dilation

    return math.log(fractal_unit_dilation(theta), 5)


def bound_exponents(beta: float, theta: float) -> tuple[float, float]:
    """``(upper_c, lower_c)``: growth exponents of the dilation bounds."""
    return upper_exponent(beta), lower_exponent(theta)


def spiral_chain(theta: float, n_triangles: int, shrink: Optional[float] = None) -> tuple[PointSet, TriangleTree]:
    """One-leaf tree of ``n_triangles`` triangles with apex angle ``theta``.

    Every triangle has the target t as a corner; its side away from t has
    length ``shrink * hypotenuse`` and its side toward t carries the next
    triangle. The root hypotenuse has unit length. With
    ``shrink = 2 ln(N) / N`` the boundary length increases toward
    ``-1/cos(theta)`` as ``N`` grows.
    """
    _check_obtuse(theta)
    n = int(n_triangles)
    if n < 1:
        raise ValueError("need at least one triangle")
    eps = shrink if shrink is not None else min(0.5, 2.0 * math.log(max(n, 2)) / n)
    sin_t, cos_t = math.sin(theta), math.cos(theta)
    # |next hypotenuse| / |hypotenuse| and the angle the step turns about t
    rho = eps * cos_t + math.sqrt(1.0 - (eps * sin_t) ** 2)
    gamma = math.asin(eps * sin_t)
    k = np.arange(n + 1)
    z = np.power(rho, k) * np.exp(1j * gamma * k)
    pts = np.column_stack([np.append(z.real, 0.0), np.append(z.imag, 0.0)])
    t = n + 1
    tree = TriangleTree((0, t))
    parent = -1
    for i in range(n):
        parent = tree.add(i, i + 1, t, parent, "right")
    return PointSet(pts), tree
