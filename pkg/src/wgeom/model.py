"""Weighted (w, f)-model spaces and their closed-form radial geometry."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import expr as E
from .asymptotics import Growth
from .errors import ProfileDomainError
from .profile import RadialProfile, WarpingFunction, constant_profile
from .quadrature import cumulative_integral, integrate

NEAR_ORIGIN = 1e-6
REL_TOL = 1e-13


def unit_sphere_volume(m: int) -> float:
    """Riemannian volume of the unit sphere in R^m, ``2 pi^{m/2} / Gamma(m/2)``."""
    if m < 2 or int(m) != m:
        raise ValueError("dimension must be an integer >= 2")
    return 2.0 * math.pi ** (m / 2.0) / math.gamma(m / 2.0)


def _arr(r):
    a = np.asarray(r, dtype=float)
    return np.atleast_1d(a), a.ndim == 0


def _out(values: np.ndarray, scalar: bool):
    return float(values[0]) if scalar else values


@dataclass(frozen=True)
class ExpDensity:
    """``r -> exp(log_expr(r))``, evaluated through the logarithm to avoid overflow."""

    log_expr: E.Node
    growth: Growth | None = None

    def log(self, t) -> np.ndarray:
        return E.evaluate(self.log_expr, np.asarray(t, dtype=float)).v

    def log_jet(self, t):
        return E.evaluate(self.log_expr, np.asarray(t, dtype=float))

    def __call__(self, t) -> np.ndarray:
        with np.errstate(all="ignore"):
            return np.exp(self.log(t))

    def shifted(self, c: float) -> "ExpDensity":
        """The same density divided by ``exp(c)``."""
        return ExpDensity(E.sub(self.log_expr, E.Num(float(c))), self.growth)

    def inverse(self) -> "ExpDensity":
        g = None if self.growth is None else self.growth.pow(-1.0)
        return ExpDensity(E.mul(E.Num(-1.0), self.log_expr), g)


def power_density(w: WarpingFunction, k: float, weight: RadialProfile | None = None, sign: float = 1.0) -> ExpDensity:
    """``w^k * exp(sign * weight)`` as an :class:`ExpDensity` with derived tail growth."""
    node = E.mul(E.Num(float(k)), E.log_of(w.profile.expr))
    gw = w.growth()
    g = None if gw is None else gw.pow(k)
    if weight is not None and weight.expr != E.ZERO:
        node = E.add(node, E.mul(E.Num(sign), weight.expr))
        gf = weight.density_growth()
        if g is not None and gf is not None:
            g = g * (gf if sign > 0 else gf.pow(-1.0))
        else:
            g = None
    return ExpDensity(node, g)


@dataclass(frozen=True)
class WeightedModelSpace:
    """Dimension ``m``, warping ``w`` and radial log-weight ``f`` anchored at ``f(0)=0``."""

    m: int
    w: WarpingFunction
    f: RadialProfile = field(default_factory=constant_profile)

    def __post_init__(self) -> None:
        if int(self.m) != self.m or self.m < 2:
            raise ValueError(f"model dimension must be an integer >= 2, got {self.m}")
        object.__setattr__(self, "m", int(self.m))
        try:
            f0 = self.f.eval(0.0)
        except ProfileDomainError as exc:
            raise ProfileDomainError(f"weight must be defined at the pole: {exc}") from exc
        if f0 != 0.0:
            object.__setattr__(self, "f", self.f.shifted(-f0))

    # -- basic data -----------------------------------------------------------

    @property
    def domain_sup(self) -> float:
        return self.w.domain_sup

    @property
    def V0(self) -> float:
        return unit_sphere_volume(self.m)

    def area_density(self) -> ExpDensity:
        """``w^{m-1} e^f``; the weighted sphere area is ``V0`` times this."""
        return power_density(self.w, self.m - 1, self.f, +1.0)

    def resistance_density(self) -> ExpDensity:
        """``w^{1-m} e^{-f}``, the integrand of capacities and the Ahlfors test."""
        return power_density(self.w, 1 - self.m, self.f, -1.0)

    def with_weight(self, f: RadialProfile) -> "WeightedModelSpace":
        return WeightedModelSpace(self.m, self.w, f)

    def unweighted(self) -> "WeightedModelSpace":
        return WeightedModelSpace(self.m, self.w)

    def describe(self) -> dict:
        return {"m": self.m, "w": self.w.text, "f": self.f.text, "domain_sup": self.domain_sup}

    def _check_radius(self, r: np.ndarray, allow_zero: bool = True) -> None:
        lo_ok = r >= 0 if allow_zero else r > 0
        if not np.all(lo_ok & (r < self.domain_sup)):
            raise ValueError(f"radius outside (0, {self.domain_sup:g})")

    # -- volumes ------------------------------------------------------------

    def volume_ball(self, R):
        """Weighted volume ``V0 int_0^R w^{m-1} e^f``."""
        R, scalar = _arr(R)
        self._check_radius(R)
        vals = cumulative_integral(self.area_density(), 0.0, R, tol=0.0, rtol=REL_TOL)
        return _out(self.V0 * vals, scalar)

    def area_sphere(self, R):
        """Weighted area ``V0 w^{m-1}(R) e^{f(R)}``."""
        R, scalar = _arr(R)
        self._check_radius(R)
        return _out(self.V0 * self.area_density()(R), scalar)

    def _series_coefficient(self) -> float:
        return (self.m - 1) * self.w.eval(0.0, 2) / 2.0 + self.f.eval(0.0, 1)

    def iso_quotient(self, R):
        """Volume over area, computed as ``int_0^R exp(L(s) - L(R)) ds`` with ``L`` the log area density."""
        R, scalar = _arr(R)
        self._check_radius(R)
        dens = self.area_density()
        m = self.m
        c = self._series_coefficient()
        small = R < NEAR_ORIGIN
        out = np.empty_like(R)
        out[small] = R[small] / m - c * R[small] ** 2 / (m * (m + 1.0))
        big = R[~small]
        if big.size:
            with np.errstate(all="ignore"):
                vol = cumulative_integral(dens, 0.0, big, tol=0.0, rtol=REL_TOL)
                q = vol / dens(big)
            for i in np.flatnonzero(~np.isfinite(q) | (q <= 0)):
                # overflow or underflow of the area: integrate the normalised density
                t = float(big[i])
                shifted = dens.shifted(float(dens.log(np.array([t]))[0]))
                q[i] = integrate(shifted, 0.0, t, tol=0.0, rtol=REL_TOL)
            out[~small] = q
        return _out(out, scalar)

    def iso_quotient_derivative(self, R):
        """``q' = 1 - q (log area density)'``."""
        R, scalar = _arr(R)
        q = self.iso_quotient(R)
        out = np.empty_like(R)
        small = R < NEAR_ORIGIN
        c = self._series_coefficient()
        m = self.m
        out[small] = 1.0 / m - 2.0 * c * R[small] / (m * (m + 1.0))
        if np.any(~small):
            lap = self.laplacian_distance(R[~small])
            out[~small] = 1.0 - np.asarray(q)[~small] * lap
        return _out(out, scalar)

    # -- curvature ----------------------------------------------------------

    def sphere_mean_curvature(self, r):
        """``w'/w``; below ``NEAR_ORIGIN`` the expansion ``1/r + w''(0)/2`` is used."""
        r, scalar = _arr(r)
        self._check_radius(r, allow_zero=False)
        j = self.w.profile.jet(r)
        with np.errstate(all="ignore"):
            eta = j.d1 / j.v
        small = r < NEAR_ORIGIN
        if np.any(small):
            eta[small] = 1.0 / r[small] + self.w.eval(0.0, 2) / 2.0
        return _out(eta, scalar)

    def hessian_distance(self, r):
        """Hessian of the distance on unit vectors orthogonal to the radial direction."""
        return self.sphere_mean_curvature(r)

    def radial_sec(self, r):
        r, scalar = _arr(r)
        self._check_radius(r, allow_zero=False)
        j = self.w.profile.jet(r)
        return _out(-j.d2 / j.v, scalar)

    def radial_ric(self, r):
        r, scalar = _arr(r)
        return _out((self.m - 1) * np.asarray(self.radial_sec(r)), scalar)

    def _weight_terms(self, r: np.ndarray, q: float) -> tuple[np.ndarray, np.ndarray]:
        j = self.f.jet(r)
        sq = np.zeros_like(r) if math.isinf(q) else j.d1 * j.d1 / q
        return j.d2, sq

    def radial_ric_h(self, r, q: float = math.inf):
        """Radial Bakry-Emery Ricci curvature ``-(m-1)w''/w - f'' - f'^2/q``."""
        if not q > 0:
            raise ValueError("q must be positive or infinite")
        r, scalar = _arr(r)
        f2, sq = self._weight_terms(r, q)
        return _out(np.asarray(self.radial_ric(r)) - f2 - sq, scalar)

    def radial_sec_h(self, r, q: float = math.inf):
        """Radial weighted sectional curvature ``-w''/w - (f'' + f'^2/q)/(m-1)``."""
        if not q > 0:
            raise ValueError("q must be positive or infinite")
        r, scalar = _arr(r)
        f2, sq = self._weight_terms(r, q)
        return _out(np.asarray(self.radial_sec(r)) - (f2 + sq) / (self.m - 1), scalar)

    def laplacian_distance(self, r):
        """Weighted Laplacian of the distance, ``(m-1) w'/w + f'``."""
        r, scalar = _arr(r)
        eta = np.asarray(self.sphere_mean_curvature(r))
        return _out((self.m - 1) * eta + self.f.jet(r).d1, scalar)


# module-level spellings of the model operations


def volume_ball(S: WeightedModelSpace, R):
    return S.volume_ball(R)


def area_sphere(S: WeightedModelSpace, R):
    return S.area_sphere(R)


def iso_quotient(S: WeightedModelSpace, R):
    return S.iso_quotient(R)


def sphere_mean_curvature(S: WeightedModelSpace, r):
    return S.sphere_mean_curvature(r)


def radial_sec(S: WeightedModelSpace, r):
    return S.radial_sec(r)


def radial_ric(S: WeightedModelSpace, r):
    return S.radial_ric(r)


def radial_ric_h(S: WeightedModelSpace, r, q: float = math.inf):
    return S.radial_ric_h(r, q)


def radial_sec_h(S: WeightedModelSpace, r, q: float = math.inf):
    return S.radial_sec_h(r, q)


def laplacian_distance(S: WeightedModelSpace, r):
    return S.laplacian_distance(r)


def hessian_distance(S: WeightedModelSpace, r):
    return S.hessian_distance(r)
