"""Discrete ground truth for the radial problems: finite differences and energy minimisation.

Nothing here uses the closed-form quotients of integrals; the schemes only
sample the area density ``a = w^{m-1} e^f`` and solve tridiagonal systems.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

from .model import WeightedModelSpace

MIN_NODES = 16


@dataclass(frozen=True)
class RadialGrid:
    nodes: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.nodes.size < MIN_NODES + 1:
            raise ValueError(f"grid needs at least {MIN_NODES} cells")
        if not np.all(np.diff(self.nodes) > 0):
            raise ValueError("grid nodes must be strictly increasing")

    def sup_distance(self, fn) -> float:
        return float(np.max(np.abs(self.values - np.asarray(fn(self.nodes)))))

    def at(self, r: float) -> float:
        return float(np.interp(r, self.nodes, self.values))


def make_nodes(a: float, b: float, N: int, spacing: str = "uniform") -> np.ndarray:
    if N < MIN_NODES:
        raise ValueError(f"N must be >= {MIN_NODES}")
    if spacing == "log":
        if a <= 0:
            raise ValueError("log-spaced grids need a positive left end")
        nodes = np.geomspace(a, b, N + 1)
    elif spacing == "uniform":
        nodes = np.linspace(a, b, N + 1)
    else:
        raise ValueError(f"unknown spacing {spacing!r}")
    nodes[0], nodes[-1] = a, b
    return nodes


def _scaled_density(S: WeightedModelSpace, r: np.ndarray) -> tuple[np.ndarray, float]:
    """Area density at ``r`` divided by its maximum there, and the log of that maximum."""
    log_a = S.area_density().log(r)
    shift = float(np.max(log_a[np.isfinite(log_a)]))
    with np.errstate(under="ignore"):
        return np.exp(log_a - shift), shift


def _check(S: WeightedModelSpace, rho: float, R: float) -> None:
    if not 0 < rho < R < S.domain_sup:
        raise ValueError(f"need 0 < rho < R < {S.domain_sup}")


def _dirichlet_solve(conductance: np.ndarray, rhs_extra: np.ndarray | None = None) -> np.ndarray:
    """Solve the path-graph Laplacian with u_0 = 1, u_N = 0 (interior unknowns only)."""
    k = conductance
    n = k.size - 1
    ab = np.zeros((3, n))
    ab[1] = k[:-1] + k[1:]
    ab[0, 1:] = -k[1:-1]
    ab[2, :-1] = -k[1:-1]
    b = np.zeros(n)
    b[0] = k[0]
    if rhs_extra is not None:
        b += rhs_extra
    return solve_banded((1, 1), ab, b)


@dataclass(frozen=True)
class BVPSolution:
    grid: RadialGrid
    capacity: float


def solve_radial_bvp(S: WeightedModelSpace, rho: float, R: float, N: int, spacing: str = "uniform") -> BVPSolution:
    """Conservative finite differences for ``(a phi')' = 0``, ``phi(rho)=1``, ``phi(R)=0``.

    Row ``i`` is the flux balance
    ``a_{i+1/2}(u_{i+1}-u_i)/h_{i+1/2} - a_{i-1/2}(u_i-u_{i-1})/h_{i-1/2} = 0``
    with ``a`` sampled at cell midpoints.  The discrete capacity is the flux
    through the inner sphere.
    """
    _check(S, rho, R)
    r = make_nodes(rho, R, N, spacing)
    h = np.diff(r)
    a, shift = _scaled_density(S, 0.5 * (r[:-1] + r[1:]))
    k = a / h
    u = np.empty(N + 1)
    u[0], u[-1] = 1.0, 0.0
    u[1:-1] = _dirichlet_solve(k)
    cap = S.V0 * np.exp(shift) * k[0] * (u[0] - u[1])
    return BVPSolution(RadialGrid(r, u), float(cap))


@dataclass(frozen=True)
class EnergyMinimum:
    energy: float
    u: RadialGrid


def minimize_dirichlet_energy(S: WeightedModelSpace, rho: float, R: float, N: int,
                              spacing: str = "uniform") -> EnergyMinimum:
    """Minimise ``V0 sum a(mid_i) (u_{i+1}-u_i)^2 / h_i`` over piecewise linear ``u``.

    The quadratic form is assembled element by element into a banded
    stiffness matrix; the minimiser solves the normal equations on the
    interior nodes.
    """
    _check(S, rho, R)
    r = make_nodes(rho, R, N, spacing)
    h = np.diff(r)
    a, shift = _scaled_density(S, 0.5 * (r[:-1] + r[1:]))
    ke = a / h  # element stiffness is ke * [[1, -1], [-1, 1]]
    n = N + 1
    diag = np.zeros(n)
    np.add.at(diag, np.arange(N), ke)
    np.add.at(diag, np.arange(1, n), ke)
    off = -ke
    # restrict to interior nodes, move the known boundary column to the right-hand side
    ab = np.zeros((3, n - 2))
    ab[1] = diag[1:-1]
    ab[0, 1:] = off[1:-1]
    ab[2, :-1] = off[1:-1]
    b = np.zeros(n - 2)
    b[0] = -off[0] * 1.0
    u = np.empty(n)
    u[0], u[-1] = 1.0, 0.0
    u[1:-1] = solve_banded((1, 1), ab, b)
    energy = S.V0 * np.exp(shift) * float(np.sum(ke * np.diff(u) ** 2))
    return EnergyMinimum(energy, RadialGrid(r, u))


def solve_exit_time(S: WeightedModelSpace, R: float, N: int, gauss_points: int = 5) -> RadialGrid:
    """Finite volumes for ``(a phi')' = -a`` on ``[0, R]`` with ``phi(R)=0``.

    Control volumes are centred on the nodes; the first one starts at the
    pole, where the flux vanishes, which is the discrete form of the
    regularity condition ``phi'(0)=0``.  Cell source terms integrate ``a``
    with a Gauss rule.
    """
    if not 0 < R < S.domain_sup:
        raise ValueError(f"need 0 < R < {S.domain_sup}")
    r = make_nodes(0.0, R, N)
    h = np.diff(r)
    mids = 0.5 * (r[:-1] + r[1:])
    # control-volume faces: 0, mids..., R (last half cell is unused)
    faces = np.concatenate([[0.0], mids, [R]])
    xg, wg = np.polynomial.legendre.leggauss(gauss_points)
    lo, hi = faces[:-1], faces[1:]
    pts = 0.5 * (hi + lo)[:, None] + 0.5 * (hi - lo)[:, None] * xg[None, :]
    all_pts = np.concatenate([mids, pts.ravel()])
    dens, _ = _scaled_density(S, all_pts)
    a_mid = dens[:N]
    a_pts = dens[N:].reshape(pts.shape)
    source = (a_pts @ wg) * 0.5 * (hi - lo)
    k = a_mid / h
    # unknowns u_0 .. u_{N-1}; u_N = 0
    n = N
    ab = np.zeros((3, n))
    diag = k.copy()
    diag[1:] += k[:-1]
    ab[1] = diag
    ab[0, 1:] = -k[:-1]
    ab[2, :-1] = -k[:-1]
    u = np.empty(N + 1)
    u[:-1] = solve_banded((1, 1), ab, source[:-1])
    u[-1] = 0.0
    return RadialGrid(r, u)


def convergence_order(Ns, errors) -> float:
    """Least-squares slope of ``-log(error)`` against ``log(N)``."""
    Ns = np.asarray(Ns, dtype=float)
    errors = np.asarray(errors, dtype=float)
    slope = np.polyfit(np.log(Ns), np.log(errors), 1)[0]
    return float(-slope)
