"""Exact total field of a plane wave on a stationary perfectly conducting
half-plane (x' <= 0, z' = 0): Sommerfeld's solution in the co-moving frame.

Both polarizations share the prefactor

    P = A' e^{-i pi/4}/sqrt(pi) * exp(i k' rho' - i k' c t')

and the Fresnel combinations G(u') -/+ G(v').  The magnetic (E-wave) and
electric (H-wave) transverse components carry an extra edge term
proportional to sqrt(2/(k' rho')), singular at the edge.
"""

import numpy as np

from .errors import EdgeSingularityError
from .fields import EMField
from .kinematics import PrimedPoint, PrimedWaveParams, sommerfeld_arguments
from .special import eval_G

#: default edge exclusion radius, in primed wavelengths
EDGE_TOL = 1e-12


def check_edge(rho_prime, k_prime, edge_tol=EDGE_TOL):
    rho_min = edge_tol * 2 * np.pi / k_prime
    if np.any(np.asarray(rho_prime) < rho_min):
        raise EdgeSingularityError(
            f"field evaluated within {edge_tol:g} wavelengths of the edge"
        )


def _pieces(p: PrimedPoint, pw: PrimedWaveParams, edge_tol):
    """Shared building blocks: phase prefactor, G(u')-G(v'), G(u')+G(v'), edge weight."""
    check_edge(p.rho_prime, pw.k_prime, edge_tol)
    u, v = sommerfeld_arguments(p, pw)
    Gu, Gv = eval_G(u), eval_G(v)
    kr = pw.k_prime * np.asarray(p.rho_prime)
    phase = np.exp(1j * (kr - pw.k_prime * pw.c * np.asarray(p.t_prime)))
    pref = np.exp(-0.25j * np.pi) / np.sqrt(np.pi) * phase
    return pref, Gu - Gv, Gu + Gv, np.sqrt(2.0 / kr)


def efield_primed(p: PrimedPoint, pw: PrimedWaveParams, edge_tol=EDGE_TOL) -> EMField:
    """E-polarization (E parallel to the edge) field in the co-moving frame."""
    pref, dG, sG, w = _pieces(p, pw, edge_tol)
    th, phi = pw.theta_prime, np.asarray(p.phi_prime)
    P = pw.A1_prime * pref
    Ey = P * dG
    cBx = P * (np.sin(th) * sG + 1j * w * np.sin(phi / 2) * np.cos(th / 2))
    # curl-consistent sign on the plane-wave term: cB_z -> -A1' cos(theta') in the lit region
    cBz = P * (-np.cos(th) * dG - 1j * w * np.cos(phi / 2) * np.cos(th / 2))
    return EMField.from_components(Ey=Ey, cBx=cBx, cBz=cBz)


def hfield_primed(p: PrimedPoint, pw: PrimedWaveParams, edge_tol=EDGE_TOL) -> EMField:
    """H-polarization (cB parallel to the edge) field in the co-moving frame."""
    pref, dG, sG, w = _pieces(p, pw, edge_tol)
    th, phi = pw.theta_prime, np.asarray(p.phi_prime)
    P = pw.A2_prime * pref
    cBy = P * sG
    # curl-consistent sign on the plane-wave term: E_x -> -A2' sin(theta') in the lit region
    Ex = P * (-np.sin(th) * dG - 1j * w * np.cos(phi / 2) * np.sin(th / 2))
    Ez = P * (np.cos(th) * sG - 1j * w * np.sin(phi / 2) * np.sin(th / 2))
    return EMField.from_components(Ex=Ex, Ez=Ez, cBy=cBy)


def total_field_primed(p: PrimedPoint, pw: PrimedWaveParams, edge_tol=EDGE_TOL) -> EMField:
    return efield_primed(p, pw, edge_tol) + hfield_primed(p, pw, edge_tol)
