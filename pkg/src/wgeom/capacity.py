"""Capacity potentials, capacities at infinity, parabolicity and exit times in model spaces.

Every potential here has the form ``phi(r) = int_r^R g / int_rho^R g`` for a
positive resistance density ``g``; capacities are ``V0 / int_rho^R g``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import expr as E
from .model import NEAR_ORIGIN, REL_TOL, ExpDensity, WeightedModelSpace, _arr, _out, power_density
from .profile import RadialProfile, WarpingFunction
from .quadrature import IntegralVerdict, Status, classify_improper, cumulative_integral, integrate

TAIL_RTOL = 1e-12


class Parabolicity(str, Enum):
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ParabolicityVerdict:
    status: Parabolicity
    evidence: IntegralVerdict
    rho_used: float

    @classmethod
    def from_tail(cls, tail: IntegralVerdict, rho: float) -> "ParabolicityVerdict":
        status = {
            Status.DIVERGES: Parabolicity.PARABOLIC,
            Status.CONVERGES: Parabolicity.HYPERBOLIC,
            Status.INCONCLUSIVE: Parabolicity.INCONCLUSIVE,
        }[tail.status]
        return cls(status, tail, rho)

    def __str__(self) -> str:
        return self.status.value


@dataclass(frozen=True)
class RadialPotential:
    """``phi(r) = int_r^R g / D`` with ``D = int_rho^R g``; ``phi(rho)=1``, ``phi(R)=0``."""

    density: ExpDensity
    rho: float
    R: float
    denominator: float

    def eval(self, r, order: int = 0):
        r, scalar = _arr(r)
        if order == 0:
            vals = -cumulative_integral(self.density, self.R, r, tol=0.0, rtol=REL_TOL) / self.denominator
            vals = np.where(r == self.rho, 1.0, np.where(r == self.R, 0.0, vals))
        elif order == 1:
            vals = -self.density(r) / self.denominator
        elif order == 2:
            lj = self.density.log_jet(r)
            vals = -np.exp(lj.v) * lj.d1 / self.denominator
        else:
            raise ValueError("order must be 0, 1 or 2")
        return _out(vals, scalar)

    def __call__(self, r):
        return self.eval(r, 0)

    @property
    def flux(self) -> float:
        """``|phi'(rho)|``."""
        return float(self.density(np.array([self.rho]))[0] / self.denominator)


@dataclass(frozen=True)
class CapacityResult:
    value: float
    potential: RadialPotential
    denominator: float


def _check_annulus(rho: float, R: float, sup: float) -> None:
    if not 0 < rho < R:
        raise ValueError(f"need 0 < rho < R, got rho={rho}, R={R}")
    if not R < sup:
        raise ValueError(f"outer radius {R} beyond the model domain {sup}")


def potential(S: WeightedModelSpace, rho: float, R: float) -> CapacityResult:
    """Capacity potential of the annulus ``B_R - B_rho`` and its weighted capacity."""
    _check_annulus(rho, R, S.domain_sup)
    dens = S.resistance_density()
    D = integrate(dens, rho, R, tol=0.0, rtol=REL_TOL)
    return CapacityResult(S.V0 / D, RadialPotential(dens, rho, R, D), D)


def annulus_capacities(S: WeightedModelSpace, rho: float, radii) -> np.ndarray:
    """``Cap(B_rho, B_R)`` for every outer radius in ``radii`` (one cumulative pass)."""
    radii = np.asarray(radii, dtype=float)
    D = cumulative_integral(S.resistance_density(), rho, radii, tol=0.0, rtol=REL_TOL)
    with np.errstate(divide="ignore"):
        return S.V0 / D


def potential_residual(S: WeightedModelSpace, res: CapacityResult, npts: int = 256) -> float:
    """Sup norm of ``phi'' + phi' ((m-1) w'/w + f')`` on a uniform grid of the annulus."""
    pot = res.potential
    r = np.linspace(pot.rho, pot.R, npts)
    d1 = pot.eval(r, 1)
    d2 = pot.eval(r, 2)
    resid = d2 + d1 * S.laplacian_distance(r)
    return float(np.max(np.abs(resid)))


def _require_complete(S: WeightedModelSpace) -> None:
    if math.isfinite(S.domain_sup):
        raise ValueError("capacity at infinity needs a model with unbounded domain")


def _tail(dens: ExpDensity, rho: float) -> IntegralVerdict:
    return classify_improper(dens, rho, dens.growth, rtol=TAIL_RTOL)


@dataclass(frozen=True)
class CapacityAtInfinity:
    value: float
    verdict: ParabolicityVerdict

    @property
    def status(self) -> Parabolicity:
        return self.verdict.status


def capacity_at_infinity(S: WeightedModelSpace, rho: float) -> CapacityAtInfinity:
    """``Cap(B_rho) = V0 / int_rho^oo w^{1-m} e^{-f}``, zero when the integral diverges."""
    _require_complete(S)
    if not rho > 0:
        raise ValueError("rho must be positive")
    tail = _tail(S.resistance_density(), rho)
    verdict = ParabolicityVerdict.from_tail(tail, rho)
    if tail.status is Status.CONVERGES:
        return CapacityAtInfinity(S.V0 / tail.value, verdict)
    if tail.status is Status.DIVERGES:
        return CapacityAtInfinity(0.0, verdict)
    return CapacityAtInfinity(math.nan, verdict)


def classify_parabolicity(S: WeightedModelSpace, rho: float = 1.0) -> ParabolicityVerdict:
    return capacity_at_infinity(S, rho).verdict


def flux_ratio(dens: ExpDensity, rho: float) -> tuple[float, IntegralVerdict]:
    """``g(rho) / int_rho^oo g``: capacity over boundary area for the potential of ``g``.

    The density is renormalised at ``rho`` first, so the value stays finite
    even where ``g`` itself over- or underflows.
    """
    log_at = float(dens.log(np.array([rho]))[0])
    tail = _tail(dens.shifted(log_at), rho)
    if tail.status is Status.CONVERGES:
        return 1.0 / tail.value, tail
    if tail.status is Status.DIVERGES:
        return 0.0, tail
    return math.nan, tail


def capacity_area_ratio(S: WeightedModelSpace, rho: float) -> tuple[float, IntegralVerdict]:
    """``Cap(B_rho) / Vol_f(dB_rho)``; invariant under adding a constant to ``f``."""
    _require_complete(S)
    return flux_ratio(S.resistance_density(), rho)


# --------------------------------------------------------------------------
# mean exit time


@dataclass(frozen=True)
class ExitTime:
    """``phi_R(s) = int_s^R q(t) dt`` with ``q`` the weighted isoperimetric quotient."""

    model: WeightedModelSpace
    R: float

    def eval(self, s, order: int = 0):
        s, scalar = _arr(s)
        S = self.model
        if order == 0:
            vals = -cumulative_integral(S.iso_quotient, self.R, s, tol=0.0, rtol=REL_TOL)
            vals = np.where(s == self.R, 0.0, vals)
        elif order == 1:
            vals = -np.asarray(S.iso_quotient(s))
        elif order == 2:
            vals = -np.asarray(S.iso_quotient_derivative(s))
        else:
            raise ValueError("order must be 0, 1 or 2")
        return _out(vals, scalar)

    def __call__(self, s):
        return self.eval(s, 0)

    def residual(self, npts: int = 256) -> float:
        """Sup norm of ``phi'' + phi' ((m-1) w'/w + f') + 1`` on a grid of (0, R].

        ``phi''`` is taken by central differences of ``phi' = -q`` so the
        check does not reuse the identity that defines ``q'``.
        """
        s = np.linspace(0.0, self.R, npts + 1)[1:]
        h = np.minimum(1e-4 * np.maximum(s, 1.0), 0.5 * s)
        d2 = (self.eval(s + h, 1) - self.eval(s - h, 1)) / (2.0 * h)
        resid = d2 + self.eval(s, 1) * self.model.laplacian_distance(s) + 1.0
        return float(np.max(np.abs(resid)))


def exit_time_transplant(S: WeightedModelSpace, R: float) -> ExitTime:
    if not 0 < R < S.domain_sup:
        raise ValueError(f"need 0 < R < {S.domain_sup}")
    return ExitTime(S, R)


# --------------------------------------------------------------------------
# operators of non-integer effective dimension


@dataclass(frozen=True)
class GeneralizedPotential:
    """Solution data of ``F'' + F' ((d-1) w'/w + drift) = 0``, ``F(rho)=1``, ``F(R)=0``."""

    eff_dim: float
    rho: float
    R: float
    flux: float  # |F'(rho)|; for R = inf the limit of the annulus fluxes
    potential: RadialPotential | None
    tail: IntegralVerdict
    verdict: ParabolicityVerdict


def generalized_density(wp: WarpingFunction, eff_dim: float, drift: RadialProfile | None, rho: float) -> ExpDensity:
    """``w^{1-d} exp(-int_rho^r drift)``."""
    if drift is None or drift.expr == E.ZERO:
        return power_density(wp, 1.0 - eff_dim)
    anti = RadialProfile(E.definite_integral(drift.expr, rho))
    return power_density(wp, 1.0 - eff_dim, anti, -1.0)


def generalized_potential(
    wp: WarpingFunction,
    eff_dim: float,
    drift: RadialProfile | None,
    rho: float,
    R: float = math.inf,
) -> GeneralizedPotential:
    """Potential of the radial operator of effective dimension ``eff_dim`` with first-order drift.

    With ``eff_dim = m`` and ``drift = f'`` this is the weighted capacity
    potential of the ``(w, f)``-model.  ``R = inf`` returns only the tail data.
    """
    if not eff_dim > 1:
        raise ValueError("effective dimension must exceed 1")
    dens = generalized_density(wp, eff_dim, drift, rho)
    g_rho = float(dens(np.array([rho]))[0])
    pot = None
    flux = math.nan
    if math.isfinite(R):
        _check_annulus(rho, R, wp.domain_sup)
        D = integrate(dens, rho, R, tol=0.0, rtol=REL_TOL)
        pot = RadialPotential(dens, rho, R, D)
        flux = g_rho / D
    if math.isfinite(wp.domain_sup):
        tail = IntegralVerdict.inconclusive(math.nan, wp.domain_sup)
    else:
        tail = _tail(dens, rho)
    if not math.isfinite(R):
        flux = g_rho / tail.value if tail.status is Status.CONVERGES else (0.0 if tail.status is Status.DIVERGES else math.nan)
    return GeneralizedPotential(eff_dim, rho, R, flux, pot, tail, ParabolicityVerdict.from_tail(tail, rho))


def generalized_residual(wp: WarpingFunction, eff_dim: float, drift: RadialProfile | None, gp: GeneralizedPotential,
                         npts: int = 256) -> float:
    """Sup norm of ``F'' + F' ((d-1) w'/w + drift)`` for a finite-annulus potential."""
    pot = gp.potential
    if pot is None:
        raise ValueError("residual needs a finite outer radius")
    r = np.linspace(pot.rho, pot.R, npts)
    j = wp.profile.jet(r)
    coeff = (eff_dim - 1.0) * j.d1 / j.v
    if drift is not None:
        coeff = coeff + drift.jet(r).v
    return float(np.max(np.abs(pot.eval(r, 2) + pot.eval(r, 1) * coeff)))


def generalized_flux_ratio(wp: WarpingFunction, eff_dim: float, drift: RadialProfile | None, rho: float) -> tuple[float, IntegralVerdict]:
    """``g(rho) / int_rho^oo g`` for ``g = w^{1-d} exp(-int drift)``."""
    return flux_ratio(generalized_density(wp, eff_dim, drift, rho), rho)


def generalized_quotient(wp: WarpingFunction, eff_dim: float, R):
    """``int_0^R w^{d-1} / w^{d-1}(R)``, the isoperimetric quotient of effective dimension ``d``."""
    R, scalar = _arr(R)
    dens = power_density(wp, eff_dim - 1.0)
    out = np.empty_like(R)
    for i, t in enumerate(R):
        if t < NEAR_ORIGIN:
            c = (eff_dim - 1.0) * wp.eval(0.0, 2) / 2.0
            out[i] = t / eff_dim - c * t * t / (eff_dim * (eff_dim + 1.0))
            continue
        shifted = dens.shifted(float(dens.log(np.array([t]))[0]))
        out[i] = integrate(shifted, 0.0, t, tol=0.0, rtol=REL_TOL)
    return _out(out, scalar)
