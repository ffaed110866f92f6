"""Loci in the (x, z) plane that are specific to the moving edge.

All straight loci are half-lines leaving the edge at (v t, 0) and are
stored as origin + unit direction, so configurations such as
cos(theta) + beta = 0 (a boundary perpendicular to the motion) need no
special casing.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NoSuchWavefrontError, UndefinedLocusError
from .kinematics import Motion, WaveParams


@dataclass(frozen=True)
class HalfLine:
    origin: tuple
    direction: tuple
    #: sign of (x - v t) on the line; 0 for a line along the z axis
    valid_side_sign: int
    degenerate: bool = False

    @classmethod
    def from_vector(cls, origin, dx, dz, degenerate=False):
        n = np.hypot(dx, dz)
        dx, dz = dx / n, dz / n
        side = 0 if abs(dx) < 1e-15 else int(np.sign(dx))
        return cls((float(origin[0]), float(origin[1])), (float(dx), float(dz)), side, degenerate)

    @property
    def angle(self):
        return float(np.arctan2(self.direction[1], self.direction[0]))

    def point(self, s):
        """Point at distance ``s`` >= 0 from the origin."""
        s = np.asarray(s, dtype=float)
        return self.origin[0] + s * self.direction[0], self.origin[1] + s * self.direction[1]

    def translated(self, dx, dz=0.0):
        return HalfLine((self.origin[0] + dx, self.origin[1] + dz), self.direction, self.valid_side_sign, self.degenerate)

    def distance(self, x, z):
        """Euclidean distance from (x, z) to the half-line."""
        px, pz = np.asarray(x) - self.origin[0], np.asarray(z) - self.origin[1]
        s = np.maximum(px * self.direction[0] + pz * self.direction[1], 0.0)
        return np.hypot(px - s * self.direction[0], pz - s * self.direction[1])


@dataclass(frozen=True)
class EquiphaseCircle:
    C: float
    center: tuple
    radius: float

    def contains(self, x, z):
        return np.hypot(np.asarray(x) - self.center[0], np.asarray(z) - self.center[1]) < self.radius


def edge_position(m: Motion, t, c=1.0):
    return (m.beta * c * t, 0.0)


def shadow_boundary(kind, w: WaveParams, m: Motion, t=0.0) -> HalfLine:
    """Shadow boundary of the incident (``"incident"``) or reflected wave.

    Direction is (-(cos th + beta), -/+ sin th): the incident boundary
    continues the incident ray past the edge, the reflected one is its
    mirror image in z = 0.  Relative to the stationary screen both are
    rotated toward -x.
    """
    if kind not in ("incident", "reflected"):
        raise ValueError(f"kind must be 'incident' or 'reflected', got {kind!r}")
    sgn = -1.0 if kind == "incident" else 1.0
    dx = -(np.cos(w.theta) + m.beta)
    dz = sgn * np.sin(w.theta)
    return HalfLine.from_vector(edge_position(m, t, w.c), dx, dz, degenerate=_grazing(w))


def _grazing(w):
    return w.theta == 0 or abs(w.theta) == np.pi


def equiphase_circle(C, w: WaveParams, m: Motion, t=0.0) -> EquiphaseCircle:
    """Wavefront of the diffracted wave at phase level ``C`` (a length).

    The level set sqrt((x - beta c t)^2 + (z/gamma)^2) + beta x - c t = C
    is the circle of radius c t + gamma^2 C about (-beta gamma^2 C, 0):
    the point where the edge was when that wavefront was launched.
    """
    g2 = m.gamma ** 2
    radius = w.c * t + g2 * C
    if radius < 0:
        raise NoSuchWavefrontError(f"wavefront C={C} has not been emitted by t={t}")
    return EquiphaseCircle(float(C), (float(-m.beta * g2 * C), 0.0), float(radius))


def equiphase_level(x, z, w: WaveParams, m: Motion, t=0.0):
    """Left-hand side of the equiphase equation at (x, z, t)."""
    b, g, c = m.beta, m.gamma, w.c
    return np.hypot(np.asarray(x) - b * c * t, np.asarray(z) / g) + b * np.asarray(x) - c * t


def extremal_z_lines(m: Motion, t=0.0, c=1.0):
    """Loci of max/min z on the equiphase circles: |z|/(x - v t) = -1/beta.

    In primed coordinates these are the rays beta + cos(phi') = 0.
    Returns (upper, lower).
    """
    if m.beta == 0:
        raise UndefinedLocusError("wavefronts are concentric when beta = 0")
    o = edge_position(m, t, c)
    return HalfLine.from_vector(o, -m.beta, 1.0), HalfLine.from_vector(o, -m.beta, -1.0)


def extremal_z_primed_angle(m: Motion):
    """phi' > 0 with beta + cos(phi') = 0."""
    return float(np.arccos(-m.beta))


def singularity_lines(w: WaveParams, m: Motion, t=0.0):
    """Rays where the asymptotic diffracted amplitude diverges.

    They are the zeros of (1 + beta cos th)(x - beta c t) + (cos th + beta) r,
    i.e. X/r = -cos(th'), z/(gamma r) = +/- sin(th').  Returned in the order
    (incident-side, reflected-side) matching :func:`shadow_boundary`.
    """
    d = 1.0 + m.beta * np.cos(w.theta)
    cos_p = (np.cos(w.theta) + m.beta) / d
    gsin_p = np.sin(w.theta) / d  # gamma * sin(theta')
    o = edge_position(m, t, w.c)
    deg = _grazing(w)
    return (
        HalfLine.from_vector(o, -cos_p, -gsin_p, deg),
        HalfLine.from_vector(o, -cos_p, gsin_p, deg),
    )
