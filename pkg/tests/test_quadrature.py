from __future__ import annotations

import math

import numpy as np
import pytest
from scipy import integrate as spi

from wgeom.asymptotics import AsymptoticOrder, GrowthKind
from wgeom.errors import IntegrandSignError
from wgeom.quadrature import Status, classify_improper, cumulative_integral, integrate


@pytest.mark.parametrize(
    "g, a, b, expected",
    [
        (lambda s: s**2, 1.0, 2.0, 7.0 / 3.0),
        (lambda s: s**2, 0.0, 1.0, 1.0 / 3.0),
        (lambda s: np.sinh(s) ** 2, 0.0, 1.0, (math.sinh(2.0) / 2.0 - 1.0) / 2.0),
        (np.exp, 0.0, 3.0, math.e**3 - 1.0),
        (lambda s: 1.0 / (1.0 + s * s), 0.0, 50.0, math.atan(50.0)),
    ],
)
def test_definite_integrals(g, a, b, expected):
    assert integrate(g, a, b) == pytest.approx(expected, abs=1e-10)


def test_sinh_square_matches_scipy():
    ref, _ = spi.quad(lambda s: math.sinh(s) ** 2, 0.0, 1.0, epsabs=1e-13)
    assert integrate(lambda s: np.sinh(s) ** 2, 0.0, 1.0) == pytest.approx(ref, abs=1e-10)
    assert ref == pytest.approx(0.40672, abs=1e-5)


def test_reversed_limits_change_sign():
    g = lambda s: np.cos(s) + 2.0  # noqa: E731
    assert integrate(g, 2.0, 0.5) == pytest.approx(-integrate(g, 0.5, 2.0), abs=1e-14)


@pytest.mark.parametrize("a, c, b", [(0.0, 0.3, 1.0), (0.1, 1.7, 4.0), (1.0, 1.001, 9.0)])
def test_additivity(a, c, b):
    g = lambda s: np.exp(-s) * np.sin(3 * s) ** 2 + s  # noqa: E731
    tol = 1e-10
    lhs = integrate(g, a, c, tol) + integrate(g, c, b, tol)
    assert lhs == pytest.approx(integrate(g, a, b, tol), abs=2 * tol)


def test_partial_integrals_monotone_for_positive_integrand():
    ts = np.linspace(0.0, 5.0, 60)
    vals = cumulative_integral(lambda s: 1.0 + np.sin(s) ** 2, 0.0, ts)
    assert np.all(np.diff(vals) > 0)
    assert vals[-1] == pytest.approx(5.0 + 2.5 - math.sin(10.0) / 4.0, abs=1e-9)


POLY = GrowthKind.POLYNOMIAL


@pytest.mark.parametrize(
    "g, a, meta, status, value",
    [
        (lambda s: s**-2.0, 1.0, AsymptoticOrder(POLY, -2.0), Status.CONVERGES, 1.0),
        (lambda s: s**-1.0, 1.0, AsymptoticOrder(POLY, -1.0), Status.DIVERGES, math.inf),
        (lambda s: np.sinh(s) ** -2.0, 1.0, AsymptoticOrder(GrowthKind.EXPONENTIAL, -2.0),
         Status.CONVERGES, 1.0 / math.tanh(1.0) - 1.0),
        (lambda s: np.exp(s * s), 1.0, AsymptoticOrder(GrowthKind.GAUSSIAN, 1.0), Status.DIVERGES, math.inf),
        (lambda s: np.exp(-s * s), 0.5, AsymptoticOrder(GrowthKind.GAUSSIAN, -1.0), Status.CONVERGES,
         0.5 * math.sqrt(math.pi) * math.erfc(0.5)),
    ],
)
def test_improper_with_metadata(g, a, meta, status, value):
    v = classify_improper(g, a, meta)
    assert v.status is status
    if status is Status.CONVERGES:
        assert v.value == pytest.approx(value, abs=1e-8)


def test_sinh_tail_value():
    v = classify_improper(lambda s: np.sinh(s) ** -2.0, 1.0, AsymptoticOrder(GrowthKind.EXPONENTIAL, -2.0))
    assert v.value == pytest.approx(0.3130353, abs=1e-7)


@pytest.mark.parametrize("p", [-1.1, -1.5, -3.0, -0.5, 0.0, 2.0])
def test_metadata_never_inconclusive(p):
    v = classify_improper(lambda s: s**p, 2.0, AsymptoticOrder(POLY, p))
    assert v.status is not Status.INCONCLUSIVE
    assert (v.status is Status.DIVERGES) == (p >= -1.0)
    if p < -1.0:
        assert v.value == pytest.approx(2.0 ** (p + 1.0) / (-p - 1.0), rel=1e-8)


def test_heuristic_fast_decay_converges():
    v = classify_improper(lambda s: np.exp(-s), 1.0)
    assert v.status is Status.CONVERGES
    assert v.value == pytest.approx(math.exp(-1.0), abs=1e-8)


def test_heuristic_growth_diverges():
    assert classify_improper(lambda s: np.ones_like(s), 1.0).status is Status.DIVERGES
    assert classify_improper(lambda s: 1.0 / s, 1.0).status is Status.DIVERGES


def test_heuristic_slow_algebraic_decay_is_inconclusive():
    # doubling increments of s^-2 shrink by exactly 1/2, not strictly below it
    assert classify_improper(lambda s: s**-2.0, 1.0).status is Status.INCONCLUSIVE


def test_negative_integrand_rejected():
    with pytest.raises(IntegrandSignError):
        classify_improper(lambda s: -np.ones_like(s), 1.0)


def test_lower_limit_must_be_positive():
    with pytest.raises(ValueError):
        classify_improper(lambda s: s**-2.0, 0.0)
