"""Radial profiles: parsed expressions with exact derivatives up to order two."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import expr as E
from .asymptotics import AsymptoticOrder, Growth, GrowthKind, expansion, growth
from .errors import InvalidWarpingError, ProfileDomainError
from .jet import Jet

WARPING_TOL = 1e-12
VALIDATION_POINTS = 512
VALIDATION_RMAX = 100.0


@dataclass(frozen=True)
class RadialProfile:
    """A function of the radial coordinate with an optional declared tail order."""

    expr: E.Node
    asym: AsymptoticOrder | None = None

    @property
    def text(self) -> str:
        try:
            return E.to_text(self.expr)
        except ValueError:
            return "<numeric integral>"

    def jet(self, r) -> Jet:
        return E.evaluate(self.expr, np.asarray(r, dtype=float))

    def eval(self, r, order: int = 0):
        """Value (order 0) or derivative (order 1, 2) at ``r``; scalar in, scalar out."""
        if order not in (0, 1, 2):
            raise ValueError("order must be 0, 1 or 2")
        scalar = np.ndim(r) == 0
        j = self.jet(np.atleast_1d(np.asarray(r, dtype=float)))
        out = (j.v, j.d1, j.d2)[order]
        if not np.all(np.isfinite(out)):
            bad = np.atleast_1d(r)[~np.isfinite(out)][0]
            raise ProfileDomainError(f"{self.text} (order {order}) is undefined at r={bad:.12g}")
        return float(out[0]) if scalar else out

    def __call__(self, r):
        return self.eval(r, 0)

    def derivative(self) -> "RadialProfile":
        return RadialProfile(E.derivative(self.expr))

    def growth(self) -> Growth | None:
        """Leading behaviour at infinity: declared order if present, else derived."""
        if self.asym is not None:
            return self.asym.to_growth()
        return growth(self.expr)

    def density_growth(self) -> Growth | None:
        """Leading behaviour of ``exp(profile)``; a declared order describes the density."""
        if self.asym is not None:
            return self.asym.to_growth()
        lp = expansion(self.expr)
        return None if lp is None else lp.exp_growth()

    def shifted(self, c: float) -> "RadialProfile":
        return RadialProfile(E.add(self.expr, E.Num(c)) if c else self.expr, self.asym)

    def __str__(self) -> str:
        return self.text


def parse_profile(text: str, asym: AsymptoticOrder | None = None) -> RadialProfile:
    return RadialProfile(E.parse(text), asym)


def constant_profile(c: float = 0.0) -> RadialProfile:
    return RadialProfile(E.Num(float(c)))


def integral_profile(integrand: RadialProfile, lower: float = 0.0) -> RadialProfile:
    """``r -> int_lower^r integrand``, in closed form whenever a primitive is known."""
    return RadialProfile(E.definite_integral(integrand.expr, lower))


@dataclass(frozen=True)
class WarpingFunction:
    """A warping ``w`` with ``w(0)=0``, ``w'(0)=1`` and ``w>0`` on the sampled interior."""

    profile: RadialProfile
    domain_sup: float = math.inf
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        self._validate()

    def _validate(self) -> None:
        p = self.profile
        try:
            w0, w1 = p.eval(0.0, 0), p.eval(0.0, 1)
        except ProfileDomainError as exc:
            raise InvalidWarpingError(f"warping undefined at 0: {exc}") from exc
        if abs(w0) > WARPING_TOL:
            raise InvalidWarpingError(f"w(0) = {w0:.6g}, expected 0")
        if abs(w1 - 1.0) > WARPING_TOL:
            raise InvalidWarpingError(f"w'(0) = {w1:.6g}, expected 1")
        hi = min(VALIDATION_RMAX, self.domain_sup * (1.0 - 1e-9))
        grid = np.geomspace(1e-8, hi, VALIDATION_POINTS)
        vals = p.jet(grid).v
        g = p.growth()
        # exact zeros are tolerated only where the profile is known to decay to 0
        underflow_ok = g is not None and g.coef > 0 and g.decays()
        bad = ~(vals > 0) & ~(underflow_ok & (vals == 0.0) & (grid > 1.0))
        if np.any(bad):
            s = grid[np.argmax(bad)]
            raise InvalidWarpingError(f"w({s:.6g}) = {vals[np.argmax(bad)]!r} is not positive")

    @property
    def text(self) -> str:
        return self.name or self.profile.text

    def eval(self, r, order: int = 0):
        return self.profile.eval(r, order)

    def __call__(self, r):
        return self.profile.eval(r, 0)

    def growth(self) -> Growth | None:
        return self.profile.growth()


def make_warping(text_or_profile, domain_sup: float = math.inf, asym: AsymptoticOrder | None = None) -> WarpingFunction:
    if isinstance(text_or_profile, str):
        prof = parse_profile(text_or_profile, asym)
    else:
        prof = text_or_profile
    return WarpingFunction(prof, domain_sup)


def space_form_warping(b: float) -> WarpingFunction:
    """Warping of the simply connected space form of constant curvature ``b``."""
    b = float(b)
    if b == 0.0:
        prof = RadialProfile(E.R, AsymptoticOrder(GrowthKind.POLYNOMIAL, 1.0))
        return WarpingFunction(prof, math.inf, name="r")
    k = math.sqrt(abs(b))
    arg = E.mul(E.Num(k), E.R)
    if b < 0:
        node = E.div(E.func("sinh", arg), E.Num(k))
        prof = RadialProfile(node, AsymptoticOrder(GrowthKind.EXPONENTIAL, k))
        return WarpingFunction(prof, math.inf)
    node = E.div(E.func("sin", arg), E.Num(k))
    return WarpingFunction(RadialProfile(node), math.pi / k)


def exponential_warping(alpha: float) -> WarpingFunction:
    """``w(r) = r exp(alpha r)``."""
    node = E.mul(E.R, E.func("exp", E.mul(E.Num(float(alpha)), E.R)))
    kind = GrowthKind.EXPONENTIAL if alpha != 0 else GrowthKind.POLYNOMIAL
    return WarpingFunction(RadialProfile(node, AsymptoticOrder(kind, alpha if alpha else 1.0)))


def polynomial_weight(coeffs) -> RadialProfile:
    """Log-weight ``f(r) = sum c_k r^k`` (ascending coefficients)."""
    return RadialProfile(E.from_polynomial(np.asarray(coeffs, dtype=float)))


def builtin_profiles() -> dict[str, RadialProfile]:
    """Every profile family the package constructs itself, at representative parameters."""
    out: dict[str, RadialProfile] = {}
    for b in (-4.0, -2.0, -1.0, -0.25, 0.0, 0.5, 1.0):
        out[f"space_form({b:g})"] = space_form_warping(b).profile
    for a in (-1.0, -0.5, 0.5, 1.0):
        out[f"r*exp({a:g}*r)"] = exponential_warping(a).profile
    out["gaussian"] = polynomial_weight([0.0, 0.0, -1.0])
    out["linear"] = polynomial_weight([0.0, 1.0])
    out["quadratic"] = polynomial_weight([0.0, -0.3, 0.7])
    return out
