import math

import numpy as np
import pytest

from movingedge.errors import EdgeSingularityError
from movingedge.fields import EMField
from movingedge.kinematics import PrimedPoint, PrimedWaveParams
from movingedge.sommerfeld import efield_primed, hfield_primed, total_field_primed
import oracles

# quadrature-oracle values at k' rho' = 5, phi' = pi/3, theta' = pi/4, A1' = A2' = 1, t' = 0
GOLDEN = {
    "Ex": -0.05070186884082295 - 0.7366198360818434j,
    "Ey": -0.07524076696689325 + 1.1215919545057722j,
    "Ez": 0.0506225829797729 + 0.7098348684057909j,
    "cBx": 0.25544006681950093 + 0.598530354409864j,
    "cBy": 0.15642932302989987 + 0.957754258694332j,
    "cBz": -0.19764590636006973 - 0.6567656440760606j,
}


@pytest.fixture
def generic():
    return PrimedPoint.from_polar(5.0, math.pi / 3), PrimedWaveParams(1.0, math.pi / 4, 1.0, 1.0)


def test_golden_generic_point(generic):
    f = total_field_primed(*generic)
    for name, want in GOLDEN.items():
        assert abs(f.component(name) - want) < 1e-12, name


def test_polarizations_are_separate(generic):
    p, pw = generic
    e, h = efield_primed(p, pw), hfield_primed(p, pw)
    assert e.E[0] == 0 and e.E[2] == 0 and e.cB[1] == 0
    assert h.E[1] == 0 and h.cB[0] == 0 and h.cB[2] == 0
    only_e = PrimedWaveParams(1.0, math.pi / 4, 1.0, 0.0)
    only_h = PrimedWaveParams(1.0, math.pi / 4, 0.0, 1.0)
    assert total_field_primed(p, only_e).allclose(e, rtol=0)
    assert total_field_primed(p, only_h).allclose(h, rtol=0)


@pytest.mark.parametrize("face", [math.pi, -math.pi])
@pytest.mark.parametrize("theta", [math.pi / 6, -math.pi / 2, 5 * math.pi / 6, 3.1])
def test_screen_conditions(face, theta):
    rho = np.geomspace(0.1, 100, 40)
    pw = PrimedWaveParams(1.0, theta, 1.0 - 0.5j, 0.3 + 2j)
    f = total_field_primed(PrimedPoint.from_polar(rho, np.full_like(rho, face)), pw)
    scale = abs(pw.A1_prime) + abs(pw.A2_prime)
    for arr in (f.E[0], f.E[1], f.cB[2]):
        assert np.max(np.abs(arr)) <= 1e-10 * scale


def test_small_theta_suppresses_h_edge_terms():
    # sin(theta'/2) -> 0 removes the edge term of E_x and E_z
    p = PrimedPoint.from_polar(0.2, 2.0)
    pw = PrimedWaveParams(1.0, 1e-9, 0.0, 1.0)
    f = hfield_primed(p, pw)
    ref_E, _ = oracles.primed_fields(1.0, 0.2, 2.0, 1e-9, 0.0, 1.0)
    np.testing.assert_allclose(f.E[2], ref_E[2], atol=1e-12)
    # E_x is proportional to sin(theta') [G(u')-G(v')] plus an O(theta') edge term
    assert abs(f.E[0]) < 1e-8


def test_edge_exclusion():
    pw = PrimedWaveParams(2.0, 0.5, 1.0, 1.0)
    with pytest.raises(EdgeSingularityError):
        total_field_primed(PrimedPoint.from_cartesian(0.0, 0.0), pw)
    f = total_field_primed(PrimedPoint.from_cartesian(1e-6, 0.0), pw)
    assert np.all(np.isfinite(f.as_array()))


def _curl_residual(pw, x, z, h):
    f = lambda dx, dz: total_field_primed(PrimedPoint.from_cartesian(x + dx, z + dz), pw).as_array()
    ddx = (f(h, 0) - f(-h, 0)) / (2 * h)
    ddz = (f(0, h) - f(0, -h)) / (2 * h)
    F = f(0, 0)
    k = pw.k_prime
    Ex, Ey, Ez, Bx, By, Bz = range(6)
    # curl E = i k cB and curl cB = -i k E for exp(-i omega t)
    r = [
        -ddz[Ey] - 1j * k * F[Bx],
        ddz[Ex] - ddx[Ez] - 1j * k * F[By],
        ddx[Ey] - 1j * k * F[Bz],
        -ddz[By] + 1j * k * F[Ex],
        ddz[Bx] - ddx[Bz] + 1j * k * F[Ey],
        ddx[By] + 1j * k * F[Ez],
    ]
    return np.max(np.abs(r), axis=0)


@pytest.mark.parametrize("theta", [0.7, -2.3])
def test_time_harmonic_maxwell_second_order(theta):
    pw = PrimedWaveParams(2 * math.pi, theta, 1.0, 0.5 - 0.5j)
    x = np.array([0.4, -0.8, 1.3, -0.3])
    z = np.array([0.6, 0.9, -0.7, -1.1])
    r1 = _curl_residual(pw, x, z, 2e-3)
    r2 = _curl_residual(pw, x, z, 1e-3)
    slope = np.log2(r1 / r2)
    assert np.all(np.abs(slope - 2) < 0.2)
    assert np.max(r2) < 1e-3


def test_deep_shadow_decay():
    # below the screen, away from both boundaries, the field is purely diffracted
    pw = PrimedWaveParams(1.0, 2 * math.pi / 3, 1.0, 1.0)
    phi = -2.5  # in (-pi, theta' - pi): shadow of both waves
    kr = np.array([1e2, 1e3, 1e4])
    mags = total_field_primed(PrimedPoint.from_polar(kr, np.full(3, phi)), pw).norm()
    slope = np.polyfit(np.log(kr), np.log(mags), 1)[0]
    assert slope == pytest.approx(-0.5, abs=0.02)


def test_emfield_arithmetic():
    a = EMField.from_components(Ex=1, cBz=2j)
    b = EMField.from_components(Ey=3)
    s = a + b
    assert s.component("Ey") == 3 and s.component("cBz") == 2j
    assert (2 * a).component("cBz") == 4j
    assert (s - b).allclose(a)
    assert EMField.zeros((2, 3)).shape == (2, 3)
    assert s.norm() == pytest.approx(math.sqrt(1 + 9 + 4))
