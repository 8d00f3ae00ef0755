from __future__ import annotations

import math

import numpy as np
import pytest

from wgeom.comparison import (
    IntrinsicScenario,
    Theorem,
    VerdictKind,
    check_hypotheses,
    hessian_bound,
    hessian_bound_vector,
    laplacian_bound,
    margin,
    verify_intrinsic,
)
from wgeom.errors import ScenarioError
from wgeom.model import WeightedModelSpace
from wgeom.profile import integral_profile, make_warping, parse_profile, space_form_warping

FLAT = space_form_warping(0.0)
HYP = space_form_warping(-1.0)
ZERO = parse_profile("0")
COTH1 = 1.0 / math.tanh(1.0)
RADII = np.array([0.25, 0.5, 1.0, 2.0, 4.0])


def scenario(ambient, comp_w, theta=None, q=None, rho0=0.0, radii=RADII):
    return IntrinsicScenario(ambient, comp_w, theta, q, rho0, radii)


def test_laplacian_bound_examples():
    assert laplacian_bound(scenario(WeightedModelSpace(3, FLAT), FLAT, theta=ZERO), "infinity", 2.0) == pytest.approx(1.0)
    assert laplacian_bound(scenario(WeightedModelSpace(3, FLAT), FLAT, q=1.0), "q", 1.0) == pytest.approx(3.0)


def test_laplacian_bound_equality_in_model():
    f = parse_profile("0.5*r - r^2")
    S = WeightedModelSpace(3, HYP, f)
    sc = scenario(S, HYP, theta=parse_profile("0.5 - 2*r"))
    r = np.linspace(0.1, 5.0, 50)
    assert np.allclose(laplacian_bound(sc, "infinity", r), S.laplacian_distance(r), atol=1e-12)


def test_hessian_bound_examples():
    sc = scenario(WeightedModelSpace(3, FLAT), HYP, q=2.0)
    assert hessian_bound(sc, "q", 1.0) == pytest.approx(2.0 * COTH1, rel=1e-12)
    assert hessian_bound(sc, "q", 1.0) == pytest.approx(2.6261, abs=5e-5)
    flat = scenario(WeightedModelSpace(3, FLAT), FLAT, theta=ZERO)
    assert hessian_bound(flat, "infinity", 4.0) == pytest.approx(0.25)
    S = WeightedModelSpace(3, HYP)
    eq = scenario(S, HYP, theta=ZERO)
    r = np.linspace(0.2, 3.0, 10)
    assert np.allclose(hessian_bound(eq, "infinity", r), S.hessian_distance(r))


def test_hessian_vector_form_vanishes_on_radial_vectors():
    sc = scenario(WeightedModelSpace(3, FLAT), FLAT, q=1.0)
    assert hessian_bound_vector(sc, 2.0, 1.0, 1.0, 0.0) == 0.0
    assert hessian_bound_vector(sc, 2.0, 1.0, 0.0, 0.0) == pytest.approx(hessian_bound(sc, "q", 2.0))


def test_missing_fields():
    sc = scenario(WeightedModelSpace(3, FLAT), FLAT)
    with pytest.raises(ScenarioError):
        laplacian_bound(sc, "q", 1.0)
    with pytest.raises(ScenarioError):
        verify_intrinsic(sc, Theorem.RICCI_VOLUME)


def test_scenario_validation():
    with pytest.raises(ScenarioError):
        scenario(WeightedModelSpace(3, FLAT), FLAT, radii=[2.0, 1.0])
    with pytest.raises(ScenarioError):
        scenario(WeightedModelSpace(3, space_form_warping(1.0)), FLAT, radii=[1.0, 4.0])
    with pytest.raises(ScenarioError):
        scenario(WeightedModelSpace(3, FLAT), FLAT, q=-1.0)


def test_hypotheses_equality_case_h3():
    sc = scenario(WeightedModelSpace(3, HYP), HYP, theta=ZERO)
    for vals in check_hypotheses(sc, Theorem.BAKRY_EMERY_CAPACITY).values():
        assert np.allclose(vals, 0.0, atol=1e-12)


def test_hypotheses_flat_against_hyperbolic_comparison():
    sc = scenario(WeightedModelSpace(3, FLAT), HYP, theta=ZERO)
    ric = check_hypotheses(sc, Theorem.RICCI_CAPACITY)["ricci_lower"]
    # raw margin is 0 - (-2) = 2, normalised by max(1, |lhs|, |rhs|) = 2
    assert np.allclose(ric, 1.0)


def test_hypotheses_gaussian():
    sc = scenario(WeightedModelSpace(3, FLAT, parse_profile("-r^2")), FLAT, theta=parse_profile("-2*r"))
    h = check_hypotheses(sc, Theorem.BAKRY_EMERY_VOLUME)
    assert np.allclose(h["ricci_inf_lower"], 1.0)  # 2 - 0, normalised by 2
    assert np.allclose(h["weight_derivative_weighted"], 0.0)


@pytest.mark.parametrize("lhs, rhs, sense, expected", [(1.0, 3.0, "le", 2.0 / 3.0), (0.5, 0.25, "ge", 0.25),
                                                        (5.0, 4.0, "le", -0.2)])
def test_normalised_margin(lhs, rhs, sense, expected):
    assert float(margin(lhs, rhs, sense)) == pytest.approx(expected)


EQUALITY_MODELS = [
    (WeightedModelSpace(3, HYP), ZERO),
    (WeightedModelSpace(3, FLAT, parse_profile("-r^2")), parse_profile("-2*r")),
    (WeightedModelSpace(4, make_warping("r*exp(0.5*r)"), parse_profile("r")), parse_profile("1")),
]


@pytest.mark.parametrize("thm", [Theorem.BAKRY_EMERY_VOLUME, Theorem.BAKRY_EMERY_CAPACITY, Theorem.RICCI_VOLUME,
                                 Theorem.RICCI_CAPACITY])
@pytest.mark.parametrize("ambient, theta", EQUALITY_MODELS)
def test_equality_saturation(thm, ambient, theta):
    rep = verify_intrinsic(scenario(ambient, ambient.w, theta=theta), thm)
    if rep.verdict.kind is VerdictKind.HYPOTHESIS_FAIL:
        # the monotone-theta clause can legitimately fail for decreasing theta
        assert rep.verdict.clause == "theta_nondecreasing"
        return
    assert rep.passed, str(rep.verdict)
    for name, vals in rep.inequality_margins.items():
        finite = vals[np.isfinite(vals)]
        if name.startswith("annulus") or name == "quotient_monotone":
            continue
        assert np.all(np.abs(finite) <= 1e-9), name


def test_cross_model_ricci_capacity():
    sc = scenario(WeightedModelSpace(3, FLAT), HYP, theta=ZERO, radii=np.array([1.0, 2.0]))
    rep = verify_intrinsic(sc, Theorem.RICCI_CAPACITY, 1e-6)
    assert rep.passed
    lhs, rhs = rep.sides["capacity_area_ratio"]
    assert lhs[0] == pytest.approx(1.0, abs=1e-9)
    assert rhs[0] == pytest.approx(1.0 / ((COTH1 - 1.0) * math.sinh(1.0) ** 2), rel=1e-9)
    assert rhs[0] == pytest.approx(2.3130, abs=1e-4)


def test_direction_consistency():
    fwd = verify_intrinsic(scenario(WeightedModelSpace(3, FLAT), HYP, theta=ZERO, radii=np.array([1.0])),
                           Theorem.RICCI_CAPACITY)
    rev = verify_intrinsic(scenario(WeightedModelSpace(3, HYP), FLAT, theta=ZERO, radii=np.array([1.0])),
                           Theorem.SECTIONAL_CAPACITY)
    assert fwd.passed and rev.passed
    a = fwd.inequality_margins["capacity_area_ratio"][0]
    b = rev.inequality_margins["capacity_area_ratio"][0]
    lhs, rhs = rev.sides["capacity_area_ratio"]
    assert lhs[0] == pytest.approx(2.3130352855, rel=1e-9) and rhs[0] == pytest.approx(1.0)
    assert a > 0 and b > 0


def test_volume_ratio_non_increasing():
    ambient = WeightedModelSpace(3, FLAT, parse_profile("-r^2"))
    sc = scenario(ambient, HYP, theta=ZERO, radii=np.geomspace(0.1, 5.0, 30))
    rep = verify_intrinsic(sc, Theorem.BAKRY_EMERY_VOLUME)
    assert rep.passed
    comp = sc.comparison_model()
    F = ambient.volume_ball(sc.radii) / comp.volume_ball(sc.radii)
    assert np.all(np.diff(F) <= 1e-12 * F[:-1])


def test_hypothesis_failure_reported():
    sc = scenario(WeightedModelSpace(3, HYP), FLAT, theta=ZERO)
    rep = verify_intrinsic(sc, Theorem.RICCI_VOLUME)
    assert rep.verdict.kind is VerdictKind.HYPOTHESIS_FAIL
    assert rep.verdict.clause == "ricci_lower"


def test_q_and_infinity_capacity_both_pass():
    ambient = WeightedModelSpace(3, FLAT, parse_profile("-0.5*r^2"))
    sc = scenario(ambient, FLAT, theta=parse_profile("-r"), q=1.0)
    assert verify_intrinsic(sc, Theorem.Q_CAPACITY).verdict.kind is not VerdictKind.INEQUALITY_VIOLATION
    assert verify_intrinsic(sc, Theorem.BAKRY_EMERY_CAPACITY).verdict.kind is not VerdictKind.INEQUALITY_VIOLATION


@pytest.mark.parametrize("thm", [Theorem.Q_VOLUME, Theorem.Q_CAPACITY])
def test_q_theorems_on_curved_ambient(thm):
    ambient = WeightedModelSpace(3, HYP, parse_profile("0.5*r"))
    sc = scenario(ambient, make_warping("sinh(1.2*r)/1.2"), q=1.0)
    assert verify_intrinsic(sc, thm).passed


def test_q_riemannian_capacity():
    ambient = WeightedModelSpace(3, HYP, parse_profile("r"))
    sc = scenario(ambient, HYP, theta=parse_profile("1"), q=1.0, rho0=0.5)
    rep = verify_intrinsic(sc, Theorem.Q_RIEMANNIAN_CAPACITY)
    assert rep.verdict.kind is not VerdictKind.INEQUALITY_VIOLATION


def test_comparison_model_uses_integrated_theta():
    sc = scenario(WeightedModelSpace(3, FLAT), FLAT, theta=parse_profile("-2*r"))
    f = sc.comparison_model().f
    assert f.eval(1.5) == pytest.approx(integral_profile(parse_profile("-2*r")).eval(1.5))
