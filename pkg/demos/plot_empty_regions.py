"""
Empty regions and beta-skeletons
================================

An edge ab belongs to the beta-skeleton when no other point lies in its
empty region: a union of two disks for beta > 1, the disk on ab for the
Gabriel graph (beta = 1) and a lens for beta < 1. Smaller beta means a
thinner region and therefore more edges.
"""

import math

import matplotlib.pyplot as plt
import numpy as np

from betaskel import PointSet, build_skeleton, region_contains

# Sample the plane and colour the region of the unit segment for three betas
a, b = (0.0, 0.0), (1.0, 0.0)
xs, ys = np.meshgrid(np.linspace(-0.6, 1.6, 220), np.linspace(-1.1, 1.1, 220))

fig, axes = plt.subplots(1, 3, figsize=(12, 4))
for ax, beta in zip(axes, [math.sqrt(2), 1.0, 1 / math.sqrt(2)]):
    inside = np.array([[region_contains(a, b, beta, (x, y)) for x, y in zip(rx, ry)] for rx, ry in zip(xs, ys)])
    ax.contourf(xs, ys, inside, levels=[0.5, 1.5], colors=["#9bc"])
    ax.plot([0, 1], [0, 0], "k-o")
    ax.set_title(f"beta = {beta:.3f}")
    ax.set_aspect("equal")

###############################################################################
# The same sweep on a random point set: edge counts fall as beta grows

ps = PointSet(np.random.default_rng(0).random((60, 2)))
fig, axes = plt.subplots(1, 4, figsize=(14, 3.8))
for ax, beta in zip(axes, [0.3, 0.7, 1.0, 2.0]):
    g = build_skeleton(ps, beta)
    for i, j in g.edges:
        ax.plot(*ps.coords[[i, j]].T, "k-", lw=0.6)
    ax.plot(*ps.coords.T, "o", ms=3)
    ax.set_title(f"beta = {beta}: {len(g.edges)} edges")
    ax.set_aspect("equal")
    ax.set_xticks([])
    ax.set_yticks([])

plt.show()
