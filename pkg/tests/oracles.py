"""Independent reference computations used only by the test-suite.

Nothing here imports the code paths it is used to check: G(a) comes from
direct quadrature, primed-frame fields are re-typed from the closed forms
with the quadrature G, and the lab-frame oracle applies the textbook
Lorentz transformation of (E, cB) to those primed fields.
"""

import math
import cmath

import numpy as np
from scipy.integrate import quad

QUAD_TOL = 1e-13


def _cquad(f, lo, hi, **kw):
    re = quad(lambda s: f(s).real, lo, hi, epsabs=QUAD_TOL, epsrel=QUAD_TOL, limit=400, **kw)[0]
    im = quad(lambda s: f(s).imag, lo, hi, epsabs=QUAD_TOL, epsrel=QUAD_TOL, limit=400, **kw)[0]
    return complex(re, im)


def G_quad(a):
    """G(a) by quadrature.

    a >= 0: rotated path tau = a + xi e^{i pi/4}, integrand ~ exp(-xi^2).
    a < 0: real segment [a, 0] split at the zeros of the phase plus the
    rotated ray from the origin.  The reflection identity is never used.
    """
    a = float(a)
    rot = cmath.exp(0.25j * math.pi)
    if a >= 0:
        f = lambda xi: cmath.exp(1j * (a + xi * rot) ** 2 - 1j * a * a) * rot
        return _cquad(f, 0.0, math.inf)
    ray = _cquad(lambda xi: cmath.exp(1j * (xi * rot) ** 2) * rot, 0.0, math.inf)
    n = int(a * a / math.pi)
    nodes = [-math.sqrt(j * math.pi) for j in range(n + 1)] + [a]
    nodes = sorted(set(nodes))
    seg = sum(
        _cquad(lambda t: cmath.exp(1j * t * t), lo, hi)
        for lo, hi in zip(nodes[:-1], nodes[1:])
    )
    return cmath.exp(-1j * a * a) * (seg + ray)


def primed_fields(krho_k, rho, phi, theta, A1, A2, c=1.0, t=0.0, G=G_quad):
    """Primed-frame E and cB (6-vector) typed straight from the closed forms.

    ``krho_k`` is the primed wavenumber.  Curl-consistent signs are used
    for the cB_z and E_x plane-wave terms (see notes in the package).
    """
    k = krho_k
    u = -math.sqrt(2 * k * rho) * math.cos((phi - theta) / 2)
    v = math.sqrt(2 * k * rho) * math.cos((phi + theta) / 2)
    Gu, Gv = G(u), G(v)
    pref = cmath.exp(-0.25j * math.pi) / math.sqrt(math.pi) * cmath.exp(1j * k * rho - 1j * k * c * t)
    w = math.sqrt(2 / (k * rho))
    ch, sh = math.cos(phi / 2), math.sin(phi / 2)
    ct, st = math.cos(theta / 2), math.sin(theta / 2)
    Ey = A1 * pref * (Gu - Gv)
    cBx = A1 * pref * (math.sin(theta) * (Gu + Gv) + 1j * w * sh * ct)
    cBz = A1 * pref * (-math.cos(theta) * (Gu - Gv) - 1j * w * ch * ct)
    cBy = A2 * pref * (Gu + Gv)
    Ex = A2 * pref * (-math.sin(theta) * (Gu - Gv) - 1j * w * ch * st)
    Ez = A2 * pref * (math.cos(theta) * (Gu + Gv) - 1j * w * sh * st)
    return np.array([Ex, Ey, Ez]), np.array([cBx, cBy, cBz])


def boost_to_lab(E, cB, beta):
    """Lab-frame fields from fields in a frame moving at +beta c along x."""
    g = 1.0 / math.sqrt(1.0 - beta * beta)
    Ex, Ey, Ez = E
    Bx, By, Bz = cB
    E_lab = np.array([Ex, g * (Ey + beta * Bz), g * (Ez - beta * By)])
    B_lab = np.array([Bx, g * (By - beta * Ez), g * (Bz + beta * Ey)])
    return E_lab, B_lab


def boost_point(x, z, t, beta, c=1.0):
    g = 1.0 / math.sqrt(1.0 - beta * beta)
    xp = g * (x - beta * c * t)
    tp = g * (t - beta * x / c)
    return xp, z, tp


def boost_wave(k, theta, A1, A2, beta):
    g = 1.0 / math.sqrt(1.0 - beta * beta)
    d = 1.0 + beta * math.cos(theta)
    thp = math.atan2(math.sin(theta) / (g * d), (math.cos(theta) + beta) / d)
    return k * g * d, thp, A1 * g * d, A2 * g * d
