"""Exact total field in the laboratory frame.

The closed forms are written in primed quantities (k', theta', rho',
phi', t') evaluated at the boosted point.  With
P = A' e^{-i pi/4}/sqrt(pi) exp(i k' rho' - i k' c t') and
W = sqrt(2/(k' rho')):

E-wave
    E_y  = gamma P [(1 - beta cos th') (Gu - Gv) - i beta W cos(ph'/2) cos(th'/2)]
    cB_x =       P [sin th' (Gu + Gv)        + i W sin(ph'/2) cos(th'/2)]
    cB_z = gamma P [(beta - cos th') (Gu - Gv) - i W cos(ph'/2) cos(th'/2)]
H-wave
    cB_y = gamma P [(1 - beta cos th') (Gu + Gv) + i beta W sin(ph'/2) sin(th'/2)]
    E_x  =       P [-sin th' (Gu - Gv)       - i W cos(ph'/2) sin(th'/2)]
    E_z  = gamma P [(cos th' - beta) (Gu + Gv) - i W sin(ph'/2) sin(th'/2)]

The field is not time-harmonic in the lab frame: t enters through both
t' and rho'.
"""

import numpy as np

from .fields import EMField
from .kinematics import (
    LabPoint,
    Motion,
    WaveParams,
    lab_to_primed,
    sommerfeld_arguments,
    transform_wave,
)
from .sommerfeld import EDGE_TOL, check_edge
from .special import eval_G


def _primed_state(p: LabPoint, w: WaveParams, m: Motion, edge_tol):
    pw = transform_wave(w, m)
    pp = lab_to_primed(p, m, w.c)
    check_edge(pp.rho_prime, pw.k_prime, edge_tol)
    u, v = sommerfeld_arguments(pp, pw)
    Gu, Gv = eval_G(u), eval_G(v)
    kr = pw.k_prime * np.asarray(pp.rho_prime)
    pref = (
        np.exp(-0.25j * np.pi)
        / np.sqrt(np.pi)
        * np.exp(1j * (kr - pw.k_prime * w.c * np.asarray(pp.t_prime)))
    )
    phi = np.asarray(pp.phi_prime)
    return pw, pref, Gu - Gv, Gu + Gv, np.sqrt(2.0 / kr), phi


def lab_field_E(p: LabPoint, w: WaveParams, m: Motion, edge_tol=EDGE_TOL) -> EMField:
    """E-wave part (incident amplitude A1) of the exact lab-frame field."""
    pw, pref, dG, sG, W, phi = _primed_state(p, w, m, edge_tol)
    b, g, th = m.beta, m.gamma, pw.theta_prime
    P = pw.A1_prime * pref
    cc = np.cos(phi / 2) * np.cos(th / 2)
    sc = np.sin(phi / 2) * np.cos(th / 2)
    Ey = g * P * ((1 - b * np.cos(th)) * dG - 1j * b * W * cc)
    cBx = P * (np.sin(th) * sG + 1j * W * sc)
    cBz = g * P * ((b - np.cos(th)) * dG - 1j * W * cc)
    return EMField.from_components(Ey=Ey, cBx=cBx, cBz=cBz)


def lab_field_H(p: LabPoint, w: WaveParams, m: Motion, edge_tol=EDGE_TOL) -> EMField:
    """H-wave part (incident amplitude A2) of the exact lab-frame field."""
    pw, pref, dG, sG, W, phi = _primed_state(p, w, m, edge_tol)
    b, g, th = m.beta, m.gamma, pw.theta_prime
    P = pw.A2_prime * pref
    ss = np.sin(phi / 2) * np.sin(th / 2)
    cs = np.cos(phi / 2) * np.sin(th / 2)
    cBy = g * P * ((1 - b * np.cos(th)) * sG + 1j * b * W * ss)
    Ex = P * (-np.sin(th) * dG - 1j * W * cs)
    Ez = g * P * ((np.cos(th) - b) * sG - 1j * W * ss)
    return EMField.from_components(Ex=Ex, Ez=Ez, cBy=cBy)


def lab_field_total(p: LabPoint, w: WaveParams, m: Motion, edge_tol=EDGE_TOL) -> EMField:
    return lab_field_E(p, w, m, edge_tol) + lab_field_H(p, w, m, edge_tol)


def plane_wave(p: LabPoint, w: WaveParams, reflected=False) -> EMField:
    """The incident plane wave (or its mirror image in z = 0), unbounded.

    Incident:  E = [-A2 sin th, A1, A2 cos th],  cB = [A1 sin th, A2, -A1 cos th]
    Reflected: E = [ A2 sin th, -A1, A2 cos th], cB = [A1 sin th, A2,  A1 cos th]
    each times exp(-i k (x cos th +/- z sin th) - i omega t).
    """
    th, A1, A2 = w.theta, w.A1, w.A2
    x, z, t = (np.asarray(a, dtype=float) for a in (p.x, p.z, p.t))
    zs = -z if reflected else z
    phase = np.exp(-1j * w.k * (x * np.cos(th) + zs * np.sin(th)) - 1j * w.omega * t)
    s = -1.0 if reflected else 1.0
    return EMField.from_components(
        Ex=-s * A2 * np.sin(th) * phase,
        Ey=s * A1 * phase,
        Ez=A2 * np.cos(th) * phase,
        cBx=A1 * np.sin(th) * phase,
        cBy=A2 * phase,
        cBz=-s * A1 * np.cos(th) * phase,
    )
