"""
Fractal paths that are their own Gabriel graph
==============================================

P(theta, k) is a path of 5**k equal segments between (0, 0) and (1, 0).
For theta = pi/4 the Gabriel graph of its vertices is exactly the path,
so the only route between the endpoints has length l1**k, which grows
like a power of the number of points.
"""

import math

import matplotlib.pyplot as plt
import numpy as np

from betaskel import FractalSpec, build_skeleton, fractal_unit_dilation, generate_fractal, path_graph
from betaskel.svg import fractal_diamonds

theta = math.pi / 4

fig, axes = plt.subplots(3, 1, figsize=(8, 7))
for ax, k in zip(axes, [1, 2, 3]):
    path = generate_fractal(FractalSpec(theta, k))
    # every block of the path sits in the diamond spanned by its endpoints
    for d in fractal_diamonds(path.vertices, theta, k - 1):
        corners = np.array(d.corners() + [d.corners()[0]])
        ax.plot(*corners.T, color="#c33", lw=0.5)
    ax.plot(*path.vertices.T, "k-", lw=0.8)
    ax.set_aspect("equal")
    ax.set_title(f"P(pi/4, {k}): {path.n} points")
    ax.axis("off")

###############################################################################
# Check the skeleton equals the path and tabulate the endpoint dilation

l1 = fractal_unit_dilation(theta)
print(" k     n   skeleton==path   dilation")
for k in range(1, 5):
    ps = generate_fractal(FractalSpec(theta, k)).pointset()
    same = build_skeleton(ps, 1.0).edges == path_graph(ps).edges
    print(f"{k:2d} {len(ps):5d}   {str(same):>14}   {l1**k:.6f}")

print("growth exponent log5(l1) =", math.log(l1, 5))

plt.show()
