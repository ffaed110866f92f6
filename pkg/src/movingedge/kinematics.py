"""Wave/motion parameters and Lorentz transformations between the
laboratory frame and the frame co-moving with the half-plane.

The half-plane occupies x' <= 0, z' = 0 in the co-moving frame, which
travels at v = beta*c along +x.  Everything here broadcasts over numpy
arrays; scalar inputs give scalar outputs.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class WaveParams:
    """Incident plane wave in the laboratory frame.

    ``theta`` is measured from +x to the direction the wave comes *from*,
    so the propagation vector is -k(cos theta, sin theta).  ``A1`` is the
    y-amplitude of E for the E-wave, ``A2`` the y-amplitude of cB for the
    H-wave.
    """

    k: float
    theta: float
    A1: complex = 1.0
    A2: complex = 0.0
    c: float = 1.0

    def __post_init__(self):
        if not (np.isfinite(self.k) and self.k > 0):
            raise DomainError(f"wavenumber must be positive, got {self.k}")
        if not (np.isfinite(self.c) and self.c > 0):
            raise DomainError(f"wave speed must be positive, got {self.c}")
        if not -np.pi < self.theta < np.pi:
            raise DomainError(f"theta must lie in (-pi, pi), got {self.theta}")
        object.__setattr__(self, "A1", complex(self.A1))
        object.__setattr__(self, "A2", complex(self.A2))

    @property
    def omega(self):
        return self.k * self.c

    @property
    def wavelength(self):
        return 2 * np.pi / self.k


@dataclass(frozen=True)
class Motion:
    beta: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.beta) and abs(self.beta) < 1):
            raise DomainError(f"|beta| must be < 1, got {self.beta}")

    @property
    def gamma(self):
        return 1.0 / np.sqrt(1.0 - self.beta * self.beta)

    def velocity(self, c=1.0):
        return self.beta * c


@dataclass(frozen=True)
class PrimedWaveParams:
    """The incident wave as seen in the co-moving frame.

    ``c`` is carried along so primed-frame fields can form exp(-i k' c t').
    """

    k_prime: float
    theta_prime: float
    A1_prime: complex
    A2_prime: complex
    c: float = 1.0

    @property
    def wavelength(self):
        return 2 * np.pi / self.k_prime


@dataclass(frozen=True)
class LabPoint:
    x: np.ndarray
    z: np.ndarray
    t: np.ndarray = 0.0


@dataclass(frozen=True)
class PrimedPoint:
    """Co-moving frame point with its cylindrical coordinates.

    Build it with :meth:`from_cartesian` (phi' on (-pi, pi], the screen
    itself mapping to the upper face phi' = pi) or :meth:`from_polar`,
    which keeps phi' exactly as given, so phi' = -pi addresses the lower
    face of the screen.
    """

    x_prime: np.ndarray
    z_prime: np.ndarray
    t_prime: np.ndarray
    rho_prime: np.ndarray = field(repr=False)
    phi_prime: np.ndarray = field(repr=False)

    @classmethod
    def from_cartesian(cls, x_prime, z_prime, t_prime=0.0):
        x_prime = np.asarray(x_prime, dtype=float)
        z_prime = np.asarray(z_prime, dtype=float)
        rho = np.hypot(x_prime, z_prime)
        # np.arctan2(-0.0, x<0) gives -pi; the screen belongs to the upper face
        phi = np.where(z_prime == 0, np.where(x_prime < 0, np.pi, 0.0), np.arctan2(z_prime, x_prime))
        return cls(_unwrap(x_prime), _unwrap(z_prime), _unwrap(t_prime), _unwrap(rho), _unwrap(phi))

    @classmethod
    def from_polar(cls, rho_prime, phi_prime, t_prime=0.0):
        rho = np.asarray(rho_prime, dtype=float)
        phi = np.asarray(phi_prime, dtype=float)
        if np.any(rho < 0):
            raise DomainError("rho' must be non-negative")
        return cls(
            _unwrap(rho * np.cos(phi)),
            _unwrap(rho * np.sin(phi)),
            _unwrap(t_prime),
            _unwrap(rho),
            _unwrap(phi),
        )


def _unwrap(a):
    a = np.asarray(a, dtype=float)
    return a[()] if a.ndim == 0 else a


def doppler_factor(w: WaveParams, m: Motion):
    """gamma (1 + beta cos theta): scales k, omega and both amplitudes."""
    return m.gamma * (1.0 + m.beta * np.cos(w.theta))


def transform_wave(w: WaveParams, m: Motion) -> PrimedWaveParams:
    """Aberration and Doppler shift of the incident wave into the moving frame."""
    d = 1.0 + m.beta * np.cos(w.theta)
    cos_p = (np.cos(w.theta) + m.beta) / d
    sin_p = np.sin(w.theta) / (m.gamma * d)
    scale = m.gamma * d
    return PrimedWaveParams(
        k_prime=w.k * scale,
        theta_prime=float(np.arctan2(sin_p, cos_p)),
        A1_prime=w.A1 * scale,
        A2_prime=w.A2 * scale,
        c=w.c,
    )


def lab_to_primed(p: LabPoint, m: Motion, c=1.0) -> PrimedPoint:
    g, b = m.gamma, m.beta
    x = np.asarray(p.x, dtype=float)
    t = np.asarray(p.t, dtype=float)
    return PrimedPoint.from_cartesian(g * (x - b * c * t), p.z, g * (t - b * x / c))


def primed_to_lab(p: PrimedPoint, m: Motion, c=1.0) -> LabPoint:
    g, b = m.gamma, m.beta
    xp = np.asarray(p.x_prime, dtype=float)
    tp = np.asarray(p.t_prime, dtype=float)
    return LabPoint(
        _unwrap(g * (xp + b * c * tp)),
        _unwrap(p.z_prime),
        _unwrap(g * (tp + b * xp / c)),
    )


def sommerfeld_arguments(p: PrimedPoint, pw: PrimedWaveParams):
    """(u', v'): the Fresnel arguments of the incident and reflected terms.

    u' < 0 where the incident plane wave is geometrically lit, v' < 0 where
    the reflected one is.
    """
    s = np.sqrt(2.0 * pw.k_prime * np.asarray(p.rho_prime))
    u = -s * np.cos((p.phi_prime - pw.theta_prime) / 2)
    v = s * np.cos((p.phi_prime + pw.theta_prime) / 2)
    return _unwrap(u), _unwrap(v)
