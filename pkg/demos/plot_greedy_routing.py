"""
Greedy routing and its triangle tree
====================================

The router uses edge st when it exists and otherwise splits at the point
that sees st under the widest angle. The split triangles form a tree whose
boundary length equals the length of the route, and one-leaf chains of
such triangles never beat the logarithmic-spiral length -1/cos(theta).
"""

import math

import matplotlib.pyplot as plt
import numpy as np

from betaskel import (
    PointSet,
    boundary_length,
    build_skeleton,
    dilation_upper_bound,
    greedy_route,
    prune_tree,
    single_leaf_bound,
    spiral_chain,
)

beta = 1 / math.sqrt(2)
ps = PointSet(np.random.default_rng(4).random((150, 2)))
g = build_skeleton(ps, beta)
c = ps.coords
s, t = int(np.argmin(c[:, 0])), int(np.argmax(c[:, 0]))
res = greedy_route(g, ps, beta, s, t)
pruned, walk = prune_tree(res.tree, ps)

fig, ax = plt.subplots(figsize=(6, 6))
for i, j in g.edges:
    ax.plot(*c[[i, j]].T, color="0.85", lw=0.6)
for i in range(len(res.tree)):
    tri = c[list(res.tree.triangle(i)) + [res.tree.a[i]]]
    ax.fill(*tri.T, alpha=0.15, color="#36c")
ax.plot(*c[res.path].T, "r-", lw=2)
ax.set_aspect("equal")
ax.set_title(f"route {len(res.path) - 1} edges, {len(res.tree)} triangles")

d = ps.dist(s, t)
print("route dilation      ", res.length / d)
print("boundary length / d ", res.boundary_length / d)
print("pruned leaves       ", len(pruned.leaves()), "of at most", 2 * len(ps))
print("upper bound         ", dilation_upper_bound(len(ps), beta))

###############################################################################
# One-leaf chains approach the spiral length from below

theta = 3 * math.pi / 4
ns = [10, 100, 1000, 10_000, 100_000]
lengths = [boundary_length(tree, pts) for pts, tree in (spiral_chain(theta, n) for n in ns)]
fig, ax = plt.subplots()
ax.semilogx(ns, lengths, "o-", label="|T| of chain")
ax.axhline(single_leaf_bound(theta), color="k", ls="--", label="-1/cos(theta)")
ax.set_xlabel("triangles")
ax.legend()

plt.show()
