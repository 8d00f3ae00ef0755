"""Submanifold-side checks: extrinsic Laplacian bounds, balance conditions and parabolicity.

Two modes are supported.  A :class:`SubModel` is a totally geodesic radial
slice of a weighted model space, where every extrinsic quantity is known
exactly and both sides of a comparison can be computed.  A
:class:`SubmanifoldProfile` only carries radial bounds for the weight
gradient and the weighted mean curvature; with it the module checks the
balance condition and runs the tail-integral test of the comparison model,
but never claims a value for the submanifold itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import expr as E
from .capacity import (
    Parabolicity,
    ParabolicityVerdict,
    classify_parabolicity,
    generalized_flux_ratio,
)
from .comparison import ABS_TOL, REL_TOL, ComparisonReport, Verdict, VerdictKind, margin
from .model import WeightedModelSpace
from .profile import RadialProfile, WarpingFunction, constant_profile, integral_profile, space_form_warping
from .quadrature import Status, classify_improper

BALANCE_GRID_DECADES = 4
BALANCE_GRID_POINTS = 257


class Direction(str, Enum):
    """Which side the radial bounds sit on.

    ``UPPER``: ``<grad h, grad r> <= psi`` and ``<H^h, grad r> <= phi``; this
    branch yields parabolicity.  ``LOWER`` reverses both and yields
    hyperbolicity.
    """

    UPPER = "upper"
    LOWER = "lower"

    @property
    def sense(self) -> str:
        return "le" if self is Direction.UPPER else "ge"


@dataclass(frozen=True)
class SubmanifoldProfile:
    n: int
    psi: RadialProfile
    phiH: RadialProfile = field(default_factory=constant_profile)
    rho: float = 1.0
    direction: Direction = Direction.UPPER

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"submanifold dimension must be an integer >= 1, got {self.n}")
        if not self.rho > 0:
            raise ValueError("rho must be positive")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "direction", Direction(self.direction))

    def reanchored(self, rho: float) -> "SubmanifoldProfile":
        return SubmanifoldProfile(self.n, self.psi, self.phiH, rho, self.direction)

    def with_mean_curvature(self, phiH: RadialProfile) -> "SubmanifoldProfile":
        return SubmanifoldProfile(self.n, self.psi, phiH, self.rho, self.direction)

    def describe(self) -> dict:
        return {"n": self.n, "psi": self.psi.text, "phiH": self.phiH.text, "rho": self.rho,
                "direction": self.direction.value}


@dataclass(frozen=True)
class SubModel:
    """The radial ``n``-dimensional slice through the pole of a weighted model space.

    It is totally geodesic, ``|grad_P r| = 1`` on it, and the radial part of
    its weighted mean curvature vanishes because the weight gradient is
    tangent to the slice.
    """

    ambient: WeightedModelSpace
    n: int
    induced: WeightedModelSpace

    @property
    def m(self) -> int:
        return self.ambient.m

    def weight_slope(self) -> RadialProfile:
        """``<grad h, grad r> = f'`` along the slice."""
        return self.ambient.f.derivative()

    def equality_profile(self, rho: float = 1.0, direction: Direction = Direction.UPPER) -> SubmanifoldProfile:
        """Bounds that hold with equality: ``psi = f'`` and ``phi = 0``."""
        return SubmanifoldProfile(self.n, self.weight_slope(), constant_profile(), rho, direction)


def totally_geodesic_submodel(ambient: WeightedModelSpace, n: int) -> SubModel:
    if int(n) != n or not 2 <= n <= ambient.m:
        raise ValueError(f"sub-model dimension must satisfy 2 <= n <= {ambient.m}, got {n}")
    n = int(n)
    return SubModel(ambient, n, WeightedModelSpace(n, ambient.w, ambient.f))


# --------------------------------------------------------------------------
# mean curvature relation


@dataclass(frozen=True)
class RelationResiduals:
    radii: np.ndarray
    lhs: np.ndarray
    rhs: np.ndarray

    @property
    def residual(self) -> np.ndarray:
        return np.abs(self.lhs - self.rhs)

    @property
    def max_residual(self) -> float:
        return float(np.max(self.residual))


def mean_curvature_relation_check(sub: SubModel, grid) -> RelationResiduals:
    """Both ways of splitting the weighted mean curvature along ``grad r``.

    Left: ``<n H_P, grad r> + <grad_P h, grad_P r>``, from the induced model.
    Right: ``<H^h_P, grad r> + <grad h, grad r>``, from the ambient model.
    """
    r = np.atleast_1d(np.asarray(grid, dtype=float))
    if np.any(r <= 0):
        raise ValueError("radii must be positive")
    grad_p_r_sq = np.ones_like(r)
    # a totally geodesic slice has no mean curvature; the normal part of
    # a radial gradient vanishes on it, so H^h_P has no radial component
    n_h = np.zeros_like(r)
    weighted_h = np.zeros_like(r)
    lhs = n_h + sub.induced.f.jet(r).d1 * grad_p_r_sq
    rhs = weighted_h + sub.ambient.f.jet(r).d1
    return RelationResiduals(r, lhs, rhs)


# --------------------------------------------------------------------------
# extrinsic Laplacian bounds


def _log_slope(w: WarpingFunction, r: np.ndarray) -> np.ndarray:
    """``w'/w`` as the derivative of ``log w``; stays finite where ``w`` underflows."""
    return E.evaluate(E.log_of(w.profile.expr), r).d1 * np.ones_like(r)


def _derivs(F, r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``(F', F'')`` from an object with ``eval(r, order)`` or a constant pair."""
    if isinstance(F, tuple):
        d1, d2 = F
        return np.full_like(r, float(d1)), np.full_like(r, float(d2))
    return np.asarray(F.eval(r, 1), dtype=float) * np.ones_like(r), np.asarray(F.eval(r, 2), dtype=float) * np.ones_like(r)


def _bound_data(data, comp_w: WarpingFunction | None, m: int | None):
    if isinstance(data, SubModel):
        return data.n, data.weight_slope(), constant_profile(), comp_w or data.ambient.w, m or data.m
    if isinstance(data, SubmanifoldProfile):
        if comp_w is None:
            raise ValueError("profile mode needs a comparison warping")
        return data.n, data.psi, data.phiH, comp_w, m
    raise TypeError("expected a SubModel or a SubmanifoldProfile")


def extrinsic_laplacian_bound(data, F, variant: str, r, grad_norm=1.0, *,
                              comp_w: WarpingFunction | None = None, m: int | None = None,
                              q: float | None = None):
    """Bound on the weighted Laplacian of ``F(r)`` on a submanifold.

    ``F`` is any radial function exposing ``eval(r, order)`` or a constant
    pair ``(F', F'')``; ``F' <= 0`` is required.  ``sec_lower`` and
    ``q_weighted`` give lower bounds, ``sec_upper`` an upper bound; both
    ``sec`` variants evaluate the same expression.
    """
    r_arr = np.atleast_1d(np.asarray(r, dtype=float))
    scalar = np.ndim(r) == 0
    if np.any(r_arr <= 0):
        raise ValueError("radii must be positive")
    g = np.asarray(grad_norm, dtype=float) * np.ones_like(r_arr)
    if np.any((g < 0) | (g > 1)):
        raise ValueError("|grad_P r| must lie in [0, 1]")
    n, psi, phi, w, m = _bound_data(data, comp_w, m)
    f1, f2 = _derivs(F, r_arr)
    if np.any(f1 > 0):
        raise ValueError("the bound needs F' <= 0")
    eta = _log_slope(w, r_arr)
    ps = psi.jet(r_arr).v * np.ones_like(r_arr)
    ph = phi.jet(r_arr).v * np.ones_like(r_arr)
    if variant in ("sec_lower", "sec_upper"):
        out = (f2 - f1 * eta) * g**2 + f1 * (n * eta + ph + ps)
    elif variant == "q_weighted":
        if m is None or q is None or not q > 0:
            raise ValueError("q_weighted needs the ambient dimension m and q > 0")
        k = (m + q - 1.0) / (m - 1.0)
        out = (f2 - f1 / (m - 1.0) * ((m + q - 1.0) * eta - ps)) * g**2 \
            + f1 * (n * k * eta + (m - n - 1.0) / (m - 1.0) * ps + ph)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return float(out[0]) if scalar else out


# --------------------------------------------------------------------------
# balance conditions


BALANCE_CHECKS = ("simpson", "sub_parabolicity", "sub_q")


@dataclass(frozen=True)
class BalanceMargins:
    check: str
    sense: str
    radii: np.ndarray
    lhs: np.ndarray
    rhs: np.ndarray
    margins: np.ndarray
    tol: float = REL_TOL

    @property
    def passed(self) -> bool:
        ok = self.margins[np.isfinite(self.margins)]
        return bool(np.all(ok >= -(ABS_TOL + self.tol)))

    @property
    def min_margin(self) -> float:
        return float(np.nanmin(self.margins))

    def first_failure(self) -> float | None:
        bad = self.margins < -(ABS_TOL + self.tol)
        return float(self.radii[np.argmax(bad)]) if np.any(bad) else None


def simpson_weight(prof: SubmanifoldProfile) -> RadialProfile:
    """``f(r) = int_0^r (psi + phi)``, the weight of the comparison model for volumes."""
    return integral_profile(RadialProfile(E.add(prof.psi.expr, prof.phiH.expr)), 0.0)


def balance_grid(rho: float, decades: int = BALANCE_GRID_DECADES, npts: int = BALANCE_GRID_POINTS) -> np.ndarray:
    return np.geomspace(rho, rho * 10.0**decades, npts)


def check_balance(check: str, prof: SubmanifoldProfile, comp_w: WarpingFunction, grid=None, *,
                  m: int | None = None, q: float | None = None, tol: float = REL_TOL) -> BalanceMargins:
    if check not in BALANCE_CHECKS:
        raise ValueError(f"unknown balance check {check!r}; expected one of {BALANCE_CHECKS}")
    r = balance_grid(prof.rho) if grid is None else np.atleast_1d(np.asarray(grid, dtype=float))
    if np.any(r < prof.rho * (1.0 - 1e-15)):
        raise ValueError("balance grid must lie in [rho, oo)")
    r = r[r < comp_w.domain_sup]
    eta = _log_slope(comp_w, r)
    psi = prof.psi.jet(r).v * np.ones_like(r)
    phi = prof.phiH.jet(r).v * np.ones_like(r)
    n = prof.n
    sense = prof.direction.sense
    if check == "simpson":
        model = WeightedModelSpace(n, comp_w, simpson_weight(prof))
        lhs = n * eta + psi + phi
        rhs = 1.0 / np.asarray(model.iso_quotient(r))
    elif check == "sub_parabolicity":
        lhs = psi + phi
        rhs = -n * eta
    else:
        if m is None or q is None or not q > 0:
            raise ValueError("the q-weighted balance needs the ambient dimension m and q > 0")
        if prof.direction is not Direction.UPPER:
            raise ValueError("the q-weighted balance only has the upper-bound form")
        lhs = (m - n - 1.0) / (m - 1.0) * psi + phi
        rhs = -n * (m + q - 1.0) / (m - 1.0) * eta
    return BalanceMargins(check, sense, r, lhs, rhs, margin(lhs, rhs, sense), tol)


# --------------------------------------------------------------------------
# full verification on sub-models


def verify_simpson(sub: SubModel, R, tol: float = REL_TOL, direction: Direction | str | None = None) -> ComparisonReport:
    """Extrinsic ball volume against the comparison quotient times the boundary flux.

    On a sub-model the extrinsic ball is the induced model ball and
    ``|grad_P r| = 1``, so the left side is the induced volume and the
    boundary integral is the induced sphere area.  The comparison model
    is rebuilt from the equality profile, not copied from the slice.

    Without an explicit ``direction`` the branch whose balance condition
    holds on ``(0, max R]`` is used; the choice is recorded in the notes.
    """
    radii = np.atleast_1d(np.asarray(R, dtype=float))
    if np.any(radii <= 0):
        raise ValueError("radii must be positive")
    top = float(np.max(radii))
    grid = np.union1d(np.linspace(top / 64.0, top, 64), radii)
    rho = float(grid[0])
    notes = [f"sub-model of dimension {sub.n} in a {sub.m}-dimensional model"]
    if direction is None:
        for cand in (Direction.UPPER, Direction.LOWER):
            if check_balance("simpson", sub.equality_profile(rho, cand), sub.ambient.w, grid, tol=tol).passed:
                direction = cand
                break
        else:
            direction = Direction.UPPER
        notes.append(f"balance branch chosen automatically: {direction.value} bounds")
    direction = Direction(direction)
    prof = sub.equality_profile(rho, direction)
    comp = WeightedModelSpace(sub.n, sub.ambient.w, simpson_weight(prof))
    lhs = np.asarray(sub.induced.volume_ball(radii))
    flux = np.asarray(sub.induced.area_sphere(radii))
    rhs = np.asarray(comp.iso_quotient(radii)) * flux
    # upper bounds on the weight slope give a lower bound on the volume
    sense = "ge" if direction is Direction.UPPER else "le"
    ineq = {"volume_vs_quotient_flux": margin(lhs, rhs, sense)}
    curv_amb = np.asarray(sub.ambient.radial_sec(grid))
    curv_cmp = np.asarray(WeightedModelSpace(sub.n, sub.ambient.w).radial_sec(grid))
    hyp = {
        "radial_sec": margin(curv_amb, curv_cmp, sense),
        "balance": check_balance("simpson", prof, sub.ambient.w, grid, tol=tol).margins,
    }
    threshold = -(ABS_TOL + tol)
    verdict = Verdict(VerdictKind.PASS)
    for kind, group, where in ((VerdictKind.HYPOTHESIS_FAIL, hyp, grid), (VerdictKind.INEQUALITY_VIOLATION, ineq, radii)):
        for name, vals in group.items():
            bad = np.isfinite(vals) & (vals < threshold)
            if np.any(bad):
                i = int(np.argmax(bad))
                verdict = Verdict(kind, float(where[i]), float(vals[i]), name)
                break
        if verdict.kind is not VerdictKind.PASS:
            break
    return ComparisonReport(
        theorem="simpson",
        radii=radii,
        hypothesis_margins=hyp,
        inequality_margins=ineq,
        sides={"volume_vs_quotient_flux": (lhs, rhs)},
        implications={},
        verdict=verdict,
        tolerances={"abs": ABS_TOL, "rel": tol},
        notes=notes,
    )


# --------------------------------------------------------------------------
# parabolicity of submanifolds


@dataclass(frozen=True)
class SubmanifoldClassification:
    """Outcome of the tail test for a submanifold profile.

    ``verdict`` is what the comparison model's tail integral says.
    ``conclusive`` is true only when the balance condition held on the
    grid and the test outcome is the one the chosen branch can certify.
    """

    verdict: ParabolicityVerdict
    capacity_ratio_bound: float
    balance: BalanceMargins
    conclusive: bool
    variant: str
    unverifiable: tuple[str, ...] = ()

    @property
    def status(self) -> Parabolicity:
        return self.verdict.status


def _effective_data(prof: SubmanifoldProfile, variant: str, m: int | None, q: float | None):
    if variant == "sec":
        drift = RadialProfile(E.add(prof.psi.expr, prof.phiH.expr))
        return float(prof.n), drift
    if variant == "q_weighted":
        if m is None or q is None or not q > 0:
            raise ValueError("the q-weighted test needs the ambient dimension m and q > 0")
        k = (m + q - 1.0) / (m - 1.0)
        drift = RadialProfile(E.add(E.mul(E.Num((m - prof.n) / (m - 1.0)), prof.psi.expr), prof.phiH.expr))
        return 1.0 + (prof.n - 1.0) * k, drift
    raise ValueError(f"unknown variant {variant!r}")


def classify_submanifold(prof: SubmanifoldProfile, comp_w: WarpingFunction, variant: str = "sec", *,
                         m: int | None = None, q: float | None = None, grid=None,
                         tol: float = REL_TOL) -> SubmanifoldClassification:
    """Tail test for ``int_rho^oo w^{1-d} exp(-int_rho (drift))``.

    For ``sec`` the exponent is ``1-n`` and the drift ``psi + phi``; for
    ``q_weighted`` the exponent is ``(1-n)(m+q-1)/(m-1)`` and the drift
    ``(m-n)/(m-1) psi + phi``.  The returned bound is the capacity over
    boundary area of the comparison potential at ``rho``.
    """
    check = "sub_parabolicity" if variant == "sec" else "sub_q"
    balance = check_balance(check, prof, comp_w, grid, m=m, q=q, tol=tol)
    eff_dim, drift = _effective_data(prof, variant, m, q)
    ratio, tail = generalized_flux_ratio(comp_w, eff_dim, drift, prof.rho)
    verdict = ParabolicityVerdict.from_tail(tail, prof.rho)
    certifiable = Parabolicity.PARABOLIC if prof.direction is Direction.UPPER else Parabolicity.HYPERBOLIC
    unverifiable = ()
    if prof.direction is Direction.LOWER:
        unverifiable = ("grad_P r does not vanish on the inner extrinsic sphere",)
    return SubmanifoldClassification(verdict, ratio, balance, balance.passed and verdict.status is certifiable,
                                     variant, unverifiable)


# --------------------------------------------------------------------------
# criteria with premises


PREMISE_FAIL = "PremiseFail"


@dataclass(frozen=True)
class CriterionResult:
    status: str
    premises: dict
    classification: SubmanifoldClassification | None = None
    rho_used: float = math.nan

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.premises.items() if v is not True]


def _tail_of_warping(w: WarpingFunction, a: float) -> Status:
    return classify_improper(w.profile, a, w.growth()).status


def _slope_bounded(w: WarpingFunction) -> bool | None:
    g = w.growth()
    if g is None:
        return None
    # w ~ exp(gauss r^2 + expo r) r^power, so w'/w ~ 2 gauss r + expo
    return bool(g.gauss == 0.0)


def _limit_sign(p: RadialProfile) -> int:
    """+1 / -1 if ``p -> +-oo``, 0 otherwise or when unknown."""
    g = p.growth()
    if g is None or not g.tends_to_infinity():
        return 0
    return 1 if g.coef > 0 else -1


def _reanchor(prof: SubmanifoldProfile, comp_w: WarpingFunction, max_decades: int = 6) -> float | None:
    """Smallest sampled radius past which the balance holds on the whole sampled range."""
    r = balance_grid(prof.rho, max_decades, 60 * max_decades + 1)
    bm = check_balance("sub_parabolicity", prof, comp_w, r)
    bad = bm.margins < -(ABS_TOL + bm.tol)
    if not np.any(bad):
        return prof.rho
    last = int(np.flatnonzero(bad)[-1])
    if last + 1 >= r.size - r.size // 4:
        return None
    return float(r[last + 1])


def check_bounded_mean_curvature_criterion(prof: SubmanifoldProfile, comp_w: WarpingFunction, c: float,
                                           direction: Direction | str | None = None) -> CriterionResult:
    """Bounded weighted mean curvature ``|H^h_P| <= c`` plus a divergent weight slope.

    Premises: the integral of ``w`` diverges (parabolic branch) or
    converges (hyperbolic branch), ``w'/w`` stays bounded, and ``psi``
    tends to ``-oo`` (parabolic) or ``+oo`` (hyperbolic).  The mean
    curvature bound becomes ``phi = +c`` or ``-c`` and ``rho`` is moved
    outward until the balance condition holds.
    """
    if not c >= 0:
        raise ValueError("mean curvature bound must be non-negative")
    direction = Direction(direction) if direction is not None else prof.direction
    upper = direction is Direction.UPPER
    tail = _tail_of_warping(comp_w, max(prof.rho, 1.0))
    premises = {
        "warping_integral": None if tail is Status.INCONCLUSIVE else (tail is Status.DIVERGES) == upper,
        "warping_slope_bounded": _slope_bounded(comp_w),
        "psi_limit": _limit_sign(prof.psi) == (-1 if upper else 1),
    }
    if not all(v is True for v in premises.values()):
        return CriterionResult(PREMISE_FAIL, premises)
    phi = constant_profile(c if upper else -c)
    base = SubmanifoldProfile(prof.n, prof.psi, phi, prof.rho, direction)
    rho = _reanchor(base, comp_w)
    premises["balance_after_reanchor"] = rho is not None
    if rho is None:
        return CriterionResult(PREMISE_FAIL, premises)
    cls = classify_submanifold(base.reanchored(rho), comp_w, "sec")
    status = cls.status.value if cls.conclusive else Parabolicity.INCONCLUSIVE.value
    return CriterionResult(status, premises, cls, rho)


def cartan_hadamard_profile(b: float, n: int, eps: float, rho: float) -> tuple[SubmanifoldProfile, WarpingFunction]:
    """Weight-slope lower bound under which ``h``-minimal submanifolds are hyperbolic.

    ``b = 0``: ``psi = -(n-2-eps)/r`` with ``w = r``; ``b < 0``:
    ``psi = -(n-1-eps) sqrt(-b) coth(sqrt(-b) r)`` with the hyperbolic
    warping of curvature ``b``.  ``phi = 0`` and the bounds are lower ones.
    """
    if b > 0:
        raise ValueError("curvature bound must be non-positive")
    if not eps > 0:
        raise ValueError("eps must be positive")
    if int(n) != n or n < 2:
        raise ValueError("dimension must be an integer >= 2")
    w = space_form_warping(b)
    if b == 0:
        psi = E.div(E.Num(-(n - 2.0 - eps)), E.R)
    else:
        k = math.sqrt(-b)
        arg = E.mul(E.Num(k), E.R)
        psi = E.mul(E.Num(-(n - 1.0 - eps) * k), E.div(E.func("cosh", arg), E.func("sinh", arg)))
    prof = SubmanifoldProfile(int(n), RadialProfile(psi), constant_profile(), rho, Direction.LOWER)
    return prof, w


def check_minimal_submanifold_hyperbolicity(b: float, n: int, eps: float, rho: float = 1.0) -> CriterionResult:
    prof, w = cartan_hadamard_profile(b, n, eps, rho)
    cls = classify_submanifold(prof, w, "sec")
    premises = {"balance": cls.balance.passed}
    status = cls.status.value if cls.conclusive else Parabolicity.INCONCLUSIVE.value
    return CriterionResult(status, premises, cls, rho)


def check_h_minimal_hypersurface_criterion(w: WarpingFunction, h: RadialProfile, m: int, q: float,
                                           rho: float = 1.0, *, ambient: WeightedModelSpace | None = None,
                                           decades: int = BALANCE_GRID_DECADES) -> CriterionResult:
    """Parabolicity of ``h``-minimal hypersurfaces from a non-increasing warping and ``h <= 0``.

    ``w`` non-increasing past ``rho`` and ``h <= 0`` are sampled on a
    geometric grid.  The curvature premise is checked only when an
    ambient model is supplied.  The test runs with ``n = m-1``,
    ``psi = h'`` and ``phi = 0``.
    """
    if int(m) != m or m < 3:
        raise ValueError("hypersurface criterion needs m >= 3")
    if not q > 0:
        raise ValueError("q must be positive")
    r = balance_grid(rho, decades)
    r = r[r < w.domain_sup]
    slope = w.profile.jet(r).d1
    r_all = np.concatenate([np.linspace(0.0, rho, 64), r])
    premises = {
        "warping_nonincreasing": bool(np.all(slope <= ABS_TOL)),
        "weight_nonpositive": bool(np.all(h.jet(r_all).v <= ABS_TOL)),
    }
    if ambient is not None:
        k = (m + q - 1.0) / (m - 1.0)
        rr = r[r < ambient.domain_sup]
        lhs = np.asarray(ambient.radial_sec_h(rr, q))
        # -(m+q-1)/(m-1) w''/w, with -w''/w the radial curvature of the w-model
        rhs = k * np.asarray(WeightedModelSpace(m, w).radial_sec(rr))
        premises["q_sectional_lower_bound"] = bool(np.all(margin(lhs, rhs, "ge") >= -(ABS_TOL + REL_TOL)))
    if not all(premises.values()):
        return CriterionResult(PREMISE_FAIL, premises)
    prof = SubmanifoldProfile(int(m) - 1, h.derivative(), constant_profile(), rho, Direction.UPPER)
    cls = classify_submanifold(prof, w, "q_weighted", m=int(m), q=q, grid=r)
    status = cls.status.value if cls.conclusive else Parabolicity.INCONCLUSIVE.value
    return CriterionResult(status, premises, cls, rho)


def induced_classification(sub: SubModel, rho: float = 1.0) -> ParabolicityVerdict:
    """Intrinsic classification of the induced model, for comparison with the profile test."""
    return classify_parabolicity(sub.induced, rho)
