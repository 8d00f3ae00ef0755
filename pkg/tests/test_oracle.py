from __future__ import annotations

import math

import numpy as np
import pytest

from wgeom.capacity import exit_time_transplant, potential
from wgeom.model import WeightedModelSpace
from wgeom.oracle import (
    RadialGrid,
    convergence_order,
    make_nodes,
    minimize_dirichlet_energy,
    solve_exit_time,
    solve_radial_bvp,
)
from wgeom.profile import make_warping, parse_profile, space_form_warping

FLAT = space_form_warping(0.0)
HYP = space_form_warping(-1.0)
R3 = WeightedModelSpace(3, FLAT)


def test_bvp_matches_analytic_potential():
    sol = solve_radial_bvp(R3, 1.0, 2.0, 1024)
    assert sol.grid.at(1.5) == pytest.approx(1 / 3, abs=1e-5)
    assert sol.grid.values[0] == 1.0 and sol.grid.values[-1] == 0.0


def test_bvp_second_order():
    exact = lambda r: (1 / r - 0.5) / 0.5  # noqa: E731
    errs = [solve_radial_bvp(R3, 1.0, 2.0, N).grid.sup_distance(exact) for N in (256, 512)]
    assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.1)


@pytest.mark.parametrize("m, rho, R, cap", [(3, 1.0, 2.0, 8 * math.pi), (2, 1.0, math.e, 2 * math.pi)])
def test_energy_matches_capacity(m, rho, R, cap):
    e = minimize_dirichlet_energy(WeightedModelSpace(m, FLAT), rho, R, 4096).energy
    assert abs(e - cap) / cap <= 1e-4


def test_energy_blows_up_on_thin_annulus():
    energies = [minimize_dirichlet_energy(R3, 1.0, 1.0 + h, 64).energy for h in (1.0, 0.1, 0.01)]
    assert energies[0] < energies[1] < energies[2]
    assert energies[2] > 1000.0


def test_energy_minimiser_agrees_with_bvp():
    S = WeightedModelSpace(4, HYP, parse_profile("0.5*r - 0.3*r^2"))
    a = solve_radial_bvp(S, 0.5, 3.0, 300).grid.values
    b = minimize_dirichlet_energy(S, 0.5, 3.0, 300).u.values
    assert np.max(np.abs(a - b)) <= 1e-10


def test_energy_converges_to_closed_form_at_second_order():
    S = WeightedModelSpace(3, make_warping("r*exp(0.5*r)"), parse_profile("r - 0.2*r^2"))
    cap = potential(S, 0.5, 2.5).value
    Ns = [256, 512, 1024, 2048]
    errs = [abs(minimize_dirichlet_energy(S, 0.5, 2.5, N).energy - cap) for N in Ns]
    assert convergence_order(Ns, errs) >= 1.9


@pytest.mark.parametrize("m, R, expected", [(3, 1.0, 1 / 6), (2, 2.0, 1.0)])
def test_exit_time_at_pole(m, R, expected):
    grid = solve_exit_time(WeightedModelSpace(m, FLAT), R, 4096)
    assert grid.values[0] == pytest.approx(expected, abs=1e-5)
    assert grid.values[-1] == 0.0


def test_exit_time_matches_transplant():
    S = WeightedModelSpace(3, HYP, parse_profile("-r^2"))
    exact = exit_time_transplant(S, 1.5)
    errs = [solve_exit_time(S, 1.5, N).sup_distance(exact) for N in (128, 256, 512)]
    assert errs[-1] <= 1e-5
    assert convergence_order([128, 256, 512], errs) >= 1.9


def test_log_spacing_and_grid_validation():
    nodes = make_nodes(0.1, 10.0, 32, "log")
    assert nodes[0] == 0.1 and nodes[-1] == 10.0
    assert np.allclose(np.diff(np.log(nodes)), math.log(100.0) / 32)
    with pytest.raises(ValueError):
        make_nodes(0.0, 1.0, 32, "log")
    with pytest.raises(ValueError):
        make_nodes(0.0, 1.0, 8)
    with pytest.raises(ValueError):
        RadialGrid(np.linspace(0, 1, 17)[::-1], np.zeros(17))


def test_log_spaced_bvp():
    sol = solve_radial_bvp(R3, 0.01, 100.0, 2048, spacing="log")
    res = potential(R3, 0.01, 100.0)
    assert sol.capacity == pytest.approx(res.value, rel=1e-4)


def test_convergence_order_of_exact_power_law():
    Ns = np.array([10, 20, 40, 80])
    assert convergence_order(Ns, 3.0 * Ns**-2.0) == pytest.approx(2.0, abs=1e-12)
