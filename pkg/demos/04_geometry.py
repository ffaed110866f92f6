# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
#       format_version: '1.5'
#       jupytext_version: 1.13.6
# ---

# # Shadow boundaries and wavefronts of the moving edge
#
# In the lab frame the shadow boundaries leave the current edge position
# and are tilted toward $-x$.  The edge-wave fronts are circles,
#
# $$
# \text{center } (-\beta\gamma^2 C,\,0), \qquad \text{radius } ct + \gamma^2 C ,
# $$
#
# one for each phase level $C$.  Each center is where the edge was when that
# front was launched, so the circles are not concentric.  The edge always
# sits inside, at $\beta$ times the radius from the center.

import matplotlib.pyplot as plt
import numpy as np

from movingedge import Motion, WaveParams, geometry

w, m, t = WaveParams(1.0, np.radians(60)), Motion(0.5), 2.0

# +
fig, ax = plt.subplots(figsize=(7, 7))
ex, _ = geometry.edge_position(m, t)
ax.plot([ex - 10, ex], [0, 0], "k", lw=3, label="screen")

for C in np.linspace(-1.5, 3.0, 10):
    try:
        circ = geometry.equiphase_circle(C, w, m, t)
    except geometry.NoSuchWavefrontError:
        continue
    ax.add_patch(plt.Circle(circ.center, circ.radius, fill=False, color="tab:blue", lw=0.8))
    ax.plot(*circ.center, ".", color="tab:blue")

for kind, col in (("incident", "tab:red"), ("reflected", "tab:orange")):
    ray = geometry.shadow_boundary(kind, w, m, t)
    ax.plot(*ray.point(np.array([0, 10])), color=col, label=f"{kind} shadow boundary")
    rest = geometry.shadow_boundary(kind, w, Motion(0.0), t).translated(ex)
    ax.plot(*rest.point(np.array([0, 10])), "--", color=col, alpha=0.5)

for line in geometry.extremal_z_lines(m, t):
    ax.plot(*line.point(np.array([0, 10])), ":", color="tab:green")

ax.set(xlim=(-8, 6), ylim=(-7, 7), aspect="equal", xlabel="x", ylabel="z")
ax.legend(loc="lower left")
# -

# Dashed lines are the boundaries for a screen at rest; the dotted pair
# passes through the top and bottom of every circle.  The rays where the
# asymptotic edge-wave amplitude diverges coincide with the shadow
# boundaries:

for s, kind in zip(geometry.singularity_lines(w, m, t), ("incident", "reflected")):
    b = geometry.shadow_boundary(kind, w, m, t)
    print(kind, np.subtract(s.direction, b.direction))

plt.show()
