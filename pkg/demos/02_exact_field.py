# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
#       format_version: '1.5'
#       jupytext_version: 1.13.6
# ---

# # The exact lab-frame field
#
# The rest-frame solution is Sommerfeld's, written with
#
# $$
# G(a) = e^{-ia^2}\int_a^\infty e^{i\tau^2}\,d\tau ,
# $$
#
# which is a scaled Faddeeva function.  Boosting the rest-frame field back
# to the lab gives closed forms for all six components.  The result is no
# longer time-harmonic, because the edge moves.

import matplotlib.pyplot as plt
import numpy as np

from movingedge import LabPoint, Motion, WaveParams, lab_field_total

# E-polarized wave ($A_1 = 1$) from the upper half-space at 120°.

w = WaveParams(k=2 * np.pi, theta=np.radians(120), A1=1.0, A2=0.0)

# Sample a grid that avoids the edge itself.  Points on the screen are fine:
# there the tangential field vanishes.

# +
x = np.linspace(-3, 3, 301)
z = np.linspace(-3, 3, 300)
X, Z = np.meshgrid(x, z)


def snapshot(beta, t):
    p = LabPoint(X.ravel(), Z.ravel(), np.full(X.size, t))
    f = lab_field_total(p, w, Motion(beta))
    return f.component("Ey").reshape(X.shape)
# -

# Compare a stationary screen with one moving at $0.6c$, at the moment the
# edge passes $x = 0$.

fig, axes = plt.subplots(1, 2, figsize=(11, 4.5), sharey=True)
for ax, beta in zip(axes, (0.0, 0.6)):
    ey = snapshot(beta, 0.0)
    im = ax.pcolormesh(X, Z, ey.real, cmap="RdBu_r", vmin=-2, vmax=2, shading="auto")
    ax.plot([-3, 0], [0, 0], "k", lw=3)
    ax.set(title=f"Re E_y, β = {beta}", xlabel="x / λ", aspect="equal")
axes[0].set_ylabel("z / λ")
fig.colorbar(im, ax=axes)

# Watching one point over a period shows the loss of time-harmonicity: the
# moving-screen signal is not a pure $e^{-i\omega t}$.

# +
t = np.linspace(0, 3, 400)
p = LabPoint(np.full_like(t, -1.0), np.full_like(t, -0.5), t)
fig, ax = plt.subplots(figsize=(7, 3))
for beta in (0.0, 0.6):
    ey = lab_field_total(p, w, Motion(beta)).component("Ey")
    ax.plot(t, np.abs(ey), label=f"|E_y|, β = {beta}")
ax.set(xlabel="c t / λ")
ax.legend()
# -

plt.show()
