"""Numerical verification harness: field-equation residuals, screen
boundary conditions and asymptotic convergence scans.

Step sizes are given in wavelengths of the incident wave so residual
scales do not depend on k.
"""

from dataclasses import dataclass, field

import numpy as np

from . import asymptotics
from .errors import PreconditionError
from .kinematics import LabPoint, Motion, PrimedPoint, WaveParams, primed_to_lab, transform_wave
from .lab_field import lab_field_total
from .sommerfeld import total_field_primed


@dataclass(frozen=True)
class ResidualReport:
    """Worst residual over the sampled points.

    ``max_abs_residual`` and ``relative_to`` are the raw residual and the
    field-scale normalizer at the point where their ratio is largest.
    """

    max_abs_residual: float
    relative_to: float
    stencil_h: float
    convergence_slope: float = None
    name: str = ""

    @property
    def relative(self):
        if self.relative_to == 0:
            return 0.0
        return self.max_abs_residual / self.relative_to

    def as_dict(self):
        return {
            "name": self.name,
            "max_abs_residual": self.max_abs_residual,
            "relative_to": self.relative_to,
            "relative": self.relative,
            "stencil_h": self.stencil_h,
            "convergence_slope": self.convergence_slope,
        }


@dataclass(frozen=True)
class Box:
    """Axis-aligned sampling region in (x, z) at times [t0, t1]."""

    xmin: float
    xmax: float
    zmin: float
    zmax: float
    t0: float = 0.0
    t1: float = 0.0

    def sample(self, n, seed=0):
        rng = np.random.default_rng(seed)
        return LabPoint(
            rng.uniform(self.xmin, self.xmax, n),
            rng.uniform(self.zmin, self.zmax, n),
            rng.uniform(self.t0, self.t1, n),
        )


def _check_region(region, h, beta, c):
    margin = 2 * h
    edge_hi = beta * c * max(region.t0, region.t1) + margin
    if region.zmin - margin < 0 < region.zmax + margin and region.xmin < edge_hi:
        raise PreconditionError("sampling region (plus stencil margin) touches the screen or edge")


def _curl(dx, dz):
    """Curl of a y-independent vector field given its x and z derivatives."""
    return np.stack([-dz[1], dz[0] - dx[2], dx[1]])


def maxwell_residual(sampler, region: Box, h=1e-3, c=1.0, *, k, beta=0.0, screen=True,
                     n_points=50, seed=0, name="maxwell"):
    """Central-difference residuals of curl E + dB/dt and curl(cB) - (1/c) dE/dt.

    ``sampler`` maps a LabPoint (array coordinates) to an EMField.  ``h`` is
    in wavelengths; the time step is h/c.  Each point's residual is
    normalized by k times the largest field magnitude on its stencil.
    """
    hl = h * 2 * np.pi / k
    if screen:
        _check_region(region, hl, beta, c)
    p = region.sample(n_points, seed)
    x, z, t = p.x, p.z, p.t

    def at(dx=0.0, dz=0.0, dt=0.0):
        return sampler(LabPoint(x + dx, z + dz, t + dt)).as_array()

    fxp, fxm = at(dx=hl), at(dx=-hl)
    fzp, fzm = at(dz=hl), at(dz=-hl)
    ftp, ftm = at(dt=hl / c), at(dt=-hl / c)
    ddx = (fxp - fxm) / (2 * hl)
    ddz = (fzp - fzm) / (2 * hl)
    ddt = (ftp - ftm) / (2 * hl / c)
    faraday = _curl(ddx[:3], ddz[:3]) + ddt[3:] / c
    ampere = _curl(ddx[3:], ddz[3:]) - ddt[:3] / c
    res = np.max(np.abs(np.concatenate([faraday, ampere])), axis=0)
    scale = k * np.max(np.abs(np.stack([fxp, fxm, fzp, fzm, ftp, ftm])), axis=(0, 1))
    ratio = np.divide(res, scale, out=np.zeros_like(res), where=scale > 0)
    i = int(np.argmax(ratio))
    return ResidualReport(float(res[i]), float(scale[i]), float(h), name=name)


def fit_slope(xs, ys):
    """Least-squares slope of log(ys) against log(xs)."""
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


def maxwell_convergence(sampler, region: Box, hs=(1e-2, 5e-3, 2.5e-3, 1.25e-3), c=1.0, **kw):
    """Residual reports over a sequence of step sizes plus the fitted order.

    The slope is computed from the relative residuals; it is attached to the
    report for the smallest h.
    """
    reports = [maxwell_residual(sampler, region, h, c, **kw) for h in hs]
    slope = fit_slope(hs, [r.relative for r in reports])
    last = reports[-1]
    reports[-1] = ResidualReport(last.max_abs_residual, last.relative_to, last.stencil_h, slope, last.name)
    return reports, slope


def boundary_residual(w: WaveParams, m: Motion, samples, name="boundary"):
    """Tangential E' and normal cB' on both faces of the screen.

    Evaluated in the co-moving frame at phi' = +pi and -pi for each rho' in
    ``samples``; normalized by |A1'| + |A2'|.
    """
    pw = transform_wave(w, m)
    rho = np.asarray(samples, dtype=float)
    worst = 0.0
    for face in (np.pi, -np.pi):
        f = total_field_primed(PrimedPoint.from_polar(rho, np.full_like(rho, face)), pw)
        # E_x, E_y tangential; cB_z normal to the screen
        worst = max(worst, float(np.max(np.abs(np.stack([f.E[0], f.E[1], f.cB[2]])))))
    scale = abs(pw.A1_prime) + abs(pw.A2_prime)
    return ResidualReport(worst, float(scale), 0.0, name=name)


def primed_angle_gap(phi, theta_prime):
    """Smallest angular distance from phi' to any shadow boundary direction."""
    bounds = np.array([theta_prime - np.pi, theta_prime + np.pi, np.pi - theta_prime, -np.pi - theta_prime])
    d = np.abs(np.asarray(phi)[..., None] - bounds)
    d = np.minimum(d, 2 * np.pi - d)
    return np.min(np.abs(d), axis=-1)


@dataclass(frozen=True)
class ConvergenceTable:
    krho: np.ndarray
    max_rel_error: np.ndarray
    slope: float = None
    directions: tuple = field(default=(), repr=False)

    def rows(self):
        return list(zip(self.krho.tolist(), self.max_rel_error.tolist()))


def convergence_scan(w: WaveParams, m: Motion, directions, krho_range, min_gap_deg=10.0, t_prime=0.0):
    """Relative error of the GO + diffracted field against the exact one.

    ``directions`` are primed-frame angles phi' (radians); every one must be
    at least ``min_gap_deg`` from both shadow boundaries.  For each k' rho'
    the maximum over directions of |asymptotic - exact| / |exact| (6-vector
    norms) is recorded; the log-log slope is fitted when there are at
    least two radii.
    """
    directions = np.asarray(directions, dtype=float)
    if directions.size == 0:
        raise PreconditionError("at least one direction is required")
    pw = transform_wave(w, m)
    if np.any(primed_angle_gap(directions, pw.theta_prime) < np.radians(min_gap_deg) - 1e-12):
        raise PreconditionError(f"directions must be >= {min_gap_deg} deg from the shadow boundaries")
    krho = np.asarray(krho_range, dtype=float)
    errs = []
    for kr in krho:
        rho = np.full_like(directions, kr / pw.k_prime)
        lp = primed_to_lab(PrimedPoint.from_polar(rho, directions, t_prime), m, w.c)
        exact = lab_field_total(lp, w, m)
        approx = asymptotics.decompose(lp, w, m).total
        errs.append(float(np.max((approx - exact).norm() / exact.norm())))
    errs = np.array(errs)
    slope = fit_slope(krho, errs) if krho.size >= 2 else None
    return ConvergenceTable(krho, errs, slope, tuple(directions.tolist()))


def default_directions(w: WaveParams, m: Motion, min_gap_deg=10.0, n=72):
    """Evenly spaced primed angles that clear every shadow boundary."""
    pw = transform_wave(w, m)
    phi = np.linspace(-np.pi, np.pi, n, endpoint=False) + np.pi / n
    return phi[primed_angle_gap(phi, pw.theta_prime) >= np.radians(min_gap_deg)]
