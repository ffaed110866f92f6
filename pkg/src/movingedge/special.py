"""The Fresnel-type integral G(a) and its two-term asymptotic form.

    G(a) = exp(-i a^2) * int_a^inf exp(i tau^2) d tau

For a >= 0 the integral is written through the Faddeeva function,
G(a) = (sqrt(pi)/2) e^{i pi/4} w(e^{i pi/4} a), which is well conditioned
in the upper half plane.  Negative arguments use the reflection identity
G(a) + G(-a) = sqrt(pi) e^{i pi/4} e^{-i a^2}, so ``wofz`` is never
evaluated in the lower half plane where it has to reconstruct a large
cancelling exponential.
"""

import numpy as np
from scipy.special import wofz

from .errors import DomainError, SingularArgumentError

SQRT_PI = np.sqrt(np.pi)
E_IPI4 = np.exp(0.25j * np.pi)
# full-line integral of exp(i tau^2)
FRESNEL_TOTAL = SQRT_PI * E_IPI4


def _check_finite(a):
    a = np.asarray(a, dtype=float)
    if not np.all(np.isfinite(a)):
        raise DomainError("G(a) requires a finite real argument")
    return a


def eval_G(a):
    """Evaluate G(a) for real (scalar or array) ``a``.

    Absolute error is at the level of a few ulps of |G| (<= 1e-12 for
    |a| <= 50).  Beyond that the phase exp(-i a^2) of the lit-side term
    is limited by the rounding of a^2 itself.
    """
    a = _check_finite(a)
    pos = np.abs(a)
    g_pos = 0.5 * FRESNEL_TOTAL * wofz(E_IPI4 * pos)
    g = np.where(a >= 0, g_pos, FRESNEL_TOTAL * np.exp(-1j * a * a) - g_pos)
    return g[()] if g.ndim == 0 else g


def heaviside(x):
    """Unit step with H(0) = 1/2."""
    return np.heaviside(x, 0.5)


def eval_G_asymptotic(a):
    """H(-a) sqrt(pi) e^{i pi/4} e^{-i a^2} + i/(2a).

    Only the geometrical-optics term and the leading diffraction term are
    retained; the remainder is O(a^-3).
    """
    a = _check_finite(a)
    if np.any(a == 0):
        raise SingularArgumentError("asymptotic form of G diverges at a = 0")
    g = heaviside(-a) * FRESNEL_TOTAL * np.exp(-1j * a * a) + 0.5j / a
    return g[()] if g.ndim == 0 else g
