# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
#       format_version: '1.5'
#       jupytext_version: 1.13.6
# ---

# # What the moving screen sees
#
# A plane wave with wavenumber $k$ hits a perfectly conducting half-plane
# ($x \le 0$, $z = 0$) whose edge slides along $+x$ at speed $v = \beta c$.
# In the screen's rest frame the problem is the classical stationary one,
# only with a different angle of incidence and a different frequency:
#
# $$
# \cos\theta' = \frac{\cos\theta + \beta}{1 + \beta\cos\theta}, \qquad
# k' = k\gamma(1 + \beta\cos\theta).
# $$
#
# This script plots both maps for a few speeds.

import matplotlib.pyplot as plt
import numpy as np

from movingedge import Motion, WaveParams, transform_wave

# Sweep the lab-frame angle of incidence at fixed $k = 1$.

# +
theta = np.linspace(-np.pi + 1e-3, np.pi - 1e-3, 721)
fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
for beta in (-0.6, -0.3, 0.0, 0.3, 0.6, 0.9):
    pw = [transform_wave(WaveParams(1.0, th), Motion(beta)) for th in theta]
    ax1.plot(np.degrees(theta), np.degrees([p.theta_prime for p in pw]), label=f"β = {beta}")
    ax2.plot(np.degrees(theta), [p.k_prime for p in pw])
ax1.set(xlabel="θ (lab) [deg]", ylabel="θ' (screen frame) [deg]")
ax2.set(xlabel="θ (lab) [deg]", ylabel="k'/k", yscale="log")
ax1.legend()
fig.tight_layout()
# -

# Head-on incidence on a receding screen is red-shifted; a screen moving
# into the wave sees it blue-shifted.  Two closed forms worth remembering:

pw = transform_wave(WaveParams(1.0, np.pi / 2), Motion(0.6))
print("theta' at normal incidence, beta = 0.6:", pw.theta_prime, "=", np.pi / 2 - np.arcsin(0.6))
pw = transform_wave(WaveParams(1.0, 0.0), Motion(0.5))
print("k'/k for theta = 0, beta = 0.5:", pw.k_prime, "=", np.sqrt(3))

plt.show()
