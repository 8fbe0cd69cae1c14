"""
Dilation exponents
==================

The routing argument bounds beta-skeleton dilation by n**c with
c = -log2(1 - beta**2) / 2, useful for beta < sqrt(3)/2. The fractal paths
give a matching lower bound n**c' with c' = log5(5 / (3 + 2 cos(theta)))
for any theta small enough that the path is its own skeleton.
"""

import math

import matplotlib.pyplot as plt
import numpy as np

from betaskel import max_theta_for_beta, run_exponent_curve
from betaskel.routing import lower_exponent

curve = np.array(run_exponent_curve(0.01, 0.866, 200))
betas = curve[:, 0]
# largest lower exponent available at each beta (theta just below the bound)
lower = [lower_exponent(0.999 * max_theta_for_beta(b)) for b in betas]

fig, ax = plt.subplots()
ax.plot(betas, curve[:, 1], label="upper exponent")
ax.plot(betas, lower, label="lower exponent (fractal)")
ax.axvline(math.sqrt(3) / 2, color="0.6", ls=":")
ax.set_xlabel("beta")
ax.set_ylabel("exponent")
ax.legend()

print("upper exponent at beta = 1/sqrt(2):", -0.5 * math.log2(0.5))

plt.show()
