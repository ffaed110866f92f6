# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
#       format_version: '1.5'
#       jupytext_version: 1.13.6
# ---

# # Geometrical optics plus an edge wave
#
# Far from the edge the field splits into the incident and reflected plane
# waves, each switched on in its lit region, plus a cylindrical wave
# launched by the edge.  The edge wave's local frequency depends on
# direction: it is Doppler shifted up ahead of the edge and down behind it.

import matplotlib.pyplot as plt
import numpy as np

from movingedge import LabPoint, Motion, WaveParams
from movingedge.asymptotics import decompose, local_frequency
from movingedge.validation import convergence_scan, default_directions

w = WaveParams(k=1.0, theta=2.0, A1=1.0, A2=0.5 + 0.5j)

# Relative error of the split against the exact field, as a function of
# distance, for directions at least 10° away from the shadow boundaries.

# +
krho = np.geomspace(1e2, 1e4, 9)
fig, ax = plt.subplots(figsize=(6, 4))
for beta in (0.0, 0.6):
    m = Motion(beta)
    table = convergence_scan(w, m, default_directions(w, m, 10.0), krho)
    ax.loglog(table.krho, table.max_rel_error, "o-", label=f"β = {beta}, slope {table.slope:.2f}")
ax.set(xlabel="k'ρ'", ylabel="max relative error")
ax.legend()
# -

# The error falls off roughly like $1/(k'\rho')$.  The leading term of the
# remainder is set by directions in which both plane waves are shadowed.

# Lit flags along a circle around the moving edge:

# +
m = Motion(0.6)
ang = np.linspace(-np.pi + 0.01, np.pi - 0.01, 2000)
p = LabPoint(50 * np.cos(ang), 50 * np.sin(ang), np.zeros_like(ang))
d = decompose(p, w, m)
fig, ax = plt.subplots(figsize=(7, 3))
ax.plot(np.degrees(ang), d.incident_lit, label="incident lit")
ax.plot(np.degrees(ang), d.reflected_lit + 0.05, label="reflected lit")
ax.set(xlabel="direction from edge [deg]")
ax.legend()
# -

# Local frequency of the edge wave, normalized by $\omega$:

# +
fig, ax = plt.subplots(figsize=(6, 3))
for beta in (0.0, 0.3, 0.6):
    m = Motion(beta)
    om = local_frequency(LabPoint(10 * np.cos(ang), 10 * np.sin(ang), np.zeros_like(ang)), w, m)
    ax.plot(np.degrees(ang), om / w.omega, label=f"β = {beta}")
ax.set(xlabel="direction from edge [deg]", ylabel="ω_d / ω")
ax.legend()
# -

plt.show()
