"""High-frequency split of the lab-frame field into geometrical-optics
(incident + reflected plane waves) and an edge-diffracted wave.

Replacing G by its two-term asymptotic form turns each exact component into
a GO part switched by the shadow indicators and a diffracted part built
from the factors below (X = x - beta c t):

    r    = sqrt(X^2 + (z/gamma)^2)
    g+-  = sqrt(r +- X)/r * (1 + beta cos th) / ((1 + beta cos th) X + (cos th + beta) r)
    h1   = r + beta X,   h2+- = r +- X,   h3 = beta r + X
    s    = exp(i k gamma^2 (1 + beta cos th)(r + beta x - c t) - i pi/4)
    f+-  = i sqrt((1 +- beta)(1 +- cos th) / (2 pi k))

Diffracted components (multiplied by A1 for the E-wave, A2 for the H-wave):

    E_y  : -gamma f+ g+ h1 s            cB_y : sgn(th z) gamma f- g- h1 s
    cB_x : sgn(z) f+ g- h2+ s           E_x  : sgn(th) f- g+ h2- s
    cB_z : -gamma f+ g+ h3 s            E_z  : -sgn(th z) gamma f- g- h3 s
"""

from dataclasses import dataclass

import numpy as np

from .errors import EdgeLocusError, ShadowBoundaryError, SingularityLineError
from .fields import EMField
from .kinematics import LabPoint, Motion, WaveParams, lab_to_primed, sommerfeld_arguments, transform_wave
from .lab_field import plane_wave
from .special import heaviside

#: |u'| or |v'| below this is treated as "on the shadow boundary"
SHADOW_TOL = 1e-6
#: relative size of the g-denominator below which a point is on a singular ray
SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class DiffractionFactors:
    f_plus: complex
    f_minus: complex
    g_plus: np.ndarray
    g_minus: np.ndarray
    h1: np.ndarray
    h2_plus: np.ndarray
    h2_minus: np.ndarray
    h3: np.ndarray
    r: np.ndarray
    s: np.ndarray


@dataclass(frozen=True)
class FieldDecomposition:
    go_incident: EMField
    go_reflected: EMField
    diffracted: EMField
    incident_lit: np.ndarray
    reflected_lit: np.ndarray
    degenerate: bool = False

    @property
    def total(self):
        return self.go_incident + self.go_reflected + self.diffracted


def _sign_theta(theta):
    return 1.0 if theta >= 0 else -1.0


def _sign_z(z):
    # z = 0 behind the edge is the upper screen face; ahead of it every
    # sign(z) factor multiplies sqrt(r - X) = 0
    return np.where(np.asarray(z) < 0, -1.0, 1.0)


def shadow_arguments(p: LabPoint, w: WaveParams, m: Motion):
    """(u', v') at the boosted point; their signs are the lit/shadow indicators."""
    return sommerfeld_arguments(lab_to_primed(p, m, w.c), transform_wave(w, m))


def go_field(p: LabPoint, w: WaveParams, m: Motion, shadow_tol=SHADOW_TOL):
    """GO incident and reflected waves, each switched off in its shadow.

    Returns ``(incident, reflected, (incident_lit, reflected_lit))``.
    """
    u, v = shadow_arguments(p, w, m)
    if np.any(np.abs(u) < shadow_tol) or np.any(np.abs(v) < shadow_tol):
        raise ShadowBoundaryError("GO field is discontinuous on a shadow boundary")
    inc_lit, ref_lit = np.asarray(u) < 0, np.asarray(v) < 0
    inc = plane_wave(p, w) * heaviside(-np.asarray(u))
    ref = plane_wave(p, w, reflected=True) * heaviside(-np.asarray(v))
    return inc, ref, (_unwrap(inc_lit), _unwrap(ref_lit))


def _unwrap(a):
    a = np.asarray(a)
    return a[()] if a.ndim == 0 else a


def diffraction_factors(p: LabPoint, w: WaveParams, m: Motion) -> DiffractionFactors:
    b, g, th, c = m.beta, m.gamma, w.theta, w.c
    x, z, t = (np.asarray(a, dtype=float) for a in (p.x, p.z, p.t))
    X = x - b * c * t
    r = np.hypot(X, z / g)
    if np.any(w.k * r < 1e-12):
        raise EdgeLocusError("diffraction factors are undefined at the edge")
    d = 1.0 + b * np.cos(th)
    denom = d * X + (np.cos(th) + b) * r
    if np.any(np.abs(denom) < SINGULAR_TOL * d * r):
        raise SingularityLineError("point lies on a singular ray of the diffracted wave")
    f_plus = 1j * np.sqrt((1 + b) * (1 + np.cos(th)) / (2 * np.pi * w.k))
    f_minus = 1j * np.sqrt((1 - b) * (1 - np.cos(th)) / (2 * np.pi * w.k))
    common = d / (r * denom)
    # r >= |X| analytically; clip the rounding
    rp, rm = np.maximum(r + X, 0.0), np.maximum(r - X, 0.0)
    s = np.exp(1j * w.k * g * g * d * (r + b * x - c * t) - 0.25j * np.pi)
    return DiffractionFactors(
        f_plus=complex(f_plus),
        f_minus=complex(f_minus),
        g_plus=_unwrap(np.sqrt(rp) * common),
        g_minus=_unwrap(np.sqrt(rm) * common),
        h1=_unwrap(r + b * X),
        h2_plus=_unwrap(rp),
        h2_minus=_unwrap(rm),
        h3=_unwrap(b * r + X),
        r=_unwrap(r),
        s=_unwrap(s),
    )


def diffracted_field(p: LabPoint, w: WaveParams, m: Motion) -> EMField:
    """Leading-order edge-diffracted wave in the lab frame."""
    fa = diffraction_factors(p, w, m)
    g = m.gamma
    sz = _sign_z(p.z)
    sth = _sign_theta(w.theta)
    e1 = -g * fa.f_plus * fa.g_plus * fa.h1 * fa.s
    e2 = sz * fa.f_plus * fa.g_minus * fa.h2_plus * fa.s
    e3 = -g * fa.f_plus * fa.g_plus * fa.h3 * fa.s
    h1 = sth * sz * g * fa.f_minus * fa.g_minus * fa.h1 * fa.s
    h2 = sth * fa.f_minus * fa.g_plus * fa.h2_minus * fa.s
    h3 = -sth * sz * g * fa.f_minus * fa.g_minus * fa.h3 * fa.s
    A1, A2 = w.A1, w.A2
    return EMField.from_components(
        Ex=A2 * h2, Ey=A1 * e1, Ez=A2 * h3, cBx=A1 * e2, cBy=A2 * h1, cBz=A1 * e3
    )


def decompose(p: LabPoint, w: WaveParams, m: Motion, shadow_tol=SHADOW_TOL) -> FieldDecomposition:
    inc, ref, (inc_lit, ref_lit) = go_field(p, w, m, shadow_tol)
    diff = diffracted_field(p, w, m)
    return FieldDecomposition(inc, ref, diff, inc_lit, ref_lit, degenerate=(w.theta == 0))


def diffracted_phase(p: LabPoint, w: WaveParams, m: Motion):
    """Phase of the diffracted wave, k gamma^2 (1 + beta cos th)(r + beta x - c t) - pi/4."""
    b, g, c = m.beta, m.gamma, w.c
    x, z, t = (np.asarray(a, dtype=float) for a in (p.x, p.z, p.t))
    r = np.hypot(x - b * c * t, z / g)
    return _unwrap(w.k * g * g * (1 + b * np.cos(w.theta)) * (r + b * x - c * t) - 0.25 * np.pi)


def local_frequency(p: LabPoint, w: WaveParams, m: Motion):
    """Instantaneous angular frequency -d(phase)/dt of the diffracted wave.

    Equals k c gamma^2 (1 + beta cos th)(1 + beta X / r): Doppler shifted
    up ahead of the edge and down behind it.
    """
    b, g, c = m.beta, m.gamma, w.c
    x, z, t = (np.asarray(a, dtype=float) for a in (p.x, p.z, p.t))
    X = x - b * c * t
    r = np.hypot(X, z / g)
    if np.any(w.k * r < 1e-12):
        raise EdgeLocusError("local frequency is undefined at the edge")
    return _unwrap(w.omega * g * g * (1 + b * np.cos(w.theta)) * (1 + b * X / r))
