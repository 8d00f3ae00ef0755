from __future__ import annotations

import math

import numpy as np
import pytest
from scipy import integrate as spi

from wgeom.model import WeightedModelSpace, unit_sphere_volume
from wgeom.profile import make_warping, parse_profile, space_form_warping

FLAT = space_form_warping(0.0)
HYP = space_form_warping(-1.0)
SPH = space_form_warping(1.0)
GAUSS = parse_profile("-r^2")


def model(m, w, f=None):
    return WeightedModelSpace(m, w, f) if f is not None else WeightedModelSpace(m, w)


@pytest.mark.parametrize("m, expected", [(2, 2 * math.pi), (3, 4 * math.pi), (4, 2 * math.pi**2), (7, 16 * math.pi**3 / 15)])
def test_unit_sphere_volume(m, expected):
    assert unit_sphere_volume(m) == pytest.approx(expected, rel=1e-14)


def test_weight_is_anchored_at_pole():
    S = model(3, FLAT, parse_profile("r^2 + 5"))
    assert S.f.eval(0.0) == 0.0
    assert S.f.eval(1.0) == pytest.approx(1.0)


@pytest.mark.parametrize("m", [1, 0, 2.5])
def test_bad_dimension(m):
    with pytest.raises(ValueError):
        model(m, FLAT)


@pytest.mark.parametrize(
    "S, R, expected",
    [
        (model(3, FLAT), 1.0, 4 * math.pi / 3),
        (model(2, HYP), 1.0, 2 * math.pi * (math.cosh(1.0) - 1.0)),
        (model(3, HYP), 2.0, 4 * math.pi * (math.sinh(4.0) / 4.0 - 1.0)),
    ],
)
def test_volume_ball(S, R, expected):
    assert S.volume_ball(R) == pytest.approx(expected, rel=1e-10)


def test_volume_ball_against_scipy():
    S = model(4, make_warping("r*exp(0.5*r)"), parse_profile("0.3*r - 0.2*r^2"))
    g = lambda t: t**3 * math.exp(1.5 * t) * math.exp(0.3 * t - 0.2 * t * t)  # noqa: E731
    ref = 2 * math.pi**2 * spi.quad(g, 0.0, 2.5, epsabs=0, epsrel=1e-13)[0]
    assert S.volume_ball(2.5) == pytest.approx(ref, rel=1e-10)


@pytest.mark.parametrize(
    "S, R, expected",
    [
        (model(3, FLAT), 2.0, 16 * math.pi),
        (model(2, HYP), 1.0, 2 * math.pi * math.sinh(1.0)),
        (model(3, FLAT, GAUSS), 1.0, 4 * math.pi * math.exp(-1.0)),
    ],
)
def test_area_sphere(S, R, expected):
    assert S.area_sphere(R) == pytest.approx(expected, rel=1e-12)


def test_iso_quotient_values():
    S = model(3, FLAT)
    assert S.iso_quotient(2.0) == pytest.approx(2.0 / 3.0, rel=1e-12)
    assert S.iso_quotient(0.0) == 0.0
    for m in (2, 3, 5):
        T = model(m, HYP, GAUSS)
        assert T.iso_quotient(1e-8) / 1e-8 == pytest.approx(1.0 / m, rel=1e-6)


def test_iso_quotient_continuous_across_series_threshold():
    S = model(3, HYP, parse_profile("r - r^2"))
    r = np.array([0.999e-6, 1.001e-6])
    q = S.iso_quotient(r)
    # jump equals the slope 1/m times the step, up to O(r^2)
    assert (q[1] - q[0]) == pytest.approx((r[1] - r[0]) / 3.0, rel=1e-4)


@pytest.mark.parametrize(
    "S",
    [model(3, FLAT), model(2, HYP), model(4, HYP, GAUSS), model(3, make_warping("r*exp(-r)"), parse_profile("r")),
     model(3, SPH)],
)
def test_volume_area_identities(S):
    R = np.linspace(0.2, min(3.0, 0.9 * S.domain_sup), 12)
    h = 1e-5
    dV = (S.volume_ball(R + h) - S.volume_ball(R - h)) / (2 * h)
    assert np.max(np.abs(dV / S.area_sphere(R) - 1.0)) <= 1e-6
    assert np.max(np.abs(S.iso_quotient(R) * S.area_sphere(R) / S.volume_ball(R) - 1.0)) <= 1e-9


@pytest.mark.parametrize(
    "w, r, expected",
    [(FLAT, 2.0, 0.5), (HYP, 1.0, 1.0 / math.tanh(1.0)), (SPH, math.pi / 2, 0.0)],
)
def test_sphere_mean_curvature_and_hessian(w, r, expected):
    S = model(3, w)
    assert S.sphere_mean_curvature(r) == pytest.approx(expected, abs=1e-12)
    assert S.hessian_distance(r) == pytest.approx(expected, abs=1e-12)


def test_mean_curvature_near_pole():
    S = model(3, HYP)
    assert S.sphere_mean_curvature(1e-8) * 1e-8 == pytest.approx(1.0, rel=1e-9)


def test_radial_curvatures():
    assert model(3, HYP).radial_sec(0.7) == pytest.approx(-1.0, abs=1e-12)
    assert model(3, FLAT).radial_sec(0.7) == 0.0
    assert model(3, HYP).radial_ric(2.0) == pytest.approx(-2.0, abs=1e-12)


@pytest.mark.parametrize(
    "q, ric, sec",
    [(math.inf, 2.0, 1.0), (1.0, -2.0, None), (4.0, None, 0.5)],
)
def test_weighted_curvatures_gaussian(q, ric, sec):
    S = model(3, FLAT, GAUSS)
    if ric is not None:
        assert S.radial_ric_h(1.0, q) == pytest.approx(ric, abs=1e-12)
    if sec is not None:
        assert S.radial_sec_h(1.0, q) == pytest.approx(sec, abs=1e-12)


def test_weighted_curvatures_reduce_without_weight():
    S = model(4, HYP)
    r = np.linspace(0.1, 3.0, 9)
    assert np.allclose(S.radial_ric_h(r, 2.0), S.radial_ric(r))
    assert np.allclose(S.radial_sec_h(r), S.radial_sec(r))


def test_weighted_ricci_monotone_in_q_and_isotropic():
    S = model(5, HYP, parse_profile("r - 0.5*r^2"))
    r = np.linspace(0.1, 4.0, 40)
    qs = [0.5, 1.0, 3.0, 10.0, math.inf]
    rics = [S.radial_ric_h(r, q) for q in qs]
    for lo, hi in zip(rics, rics[1:]):
        assert np.all(hi >= lo - 1e-12)
    for q in qs:
        assert np.allclose((S.m - 1) * S.radial_sec_h(r, q), S.radial_ric_h(r, q), rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize(
    "S, r, expected",
    [(model(3, FLAT), 2.0, 1.0), (model(2, HYP), 1.0, 1.0 / math.tanh(1.0)), (model(3, FLAT, GAUSS), 1.0, 0.0)],
)
def test_laplacian_distance(S, r, expected):
    assert S.laplacian_distance(r) == pytest.approx(expected, abs=1e-12)


def test_radius_outside_domain():
    with pytest.raises(ValueError):
        model(3, SPH).volume_ball(4.0)
