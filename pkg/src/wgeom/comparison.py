"""Executable intrinsic comparison theorems between weighted model spaces.

An :class:`IntrinsicScenario` pairs a concrete ambient model (whose radial
weight plays ``h``) with comparison data: a warping, a bound ``theta`` for
the radial derivative of the weight, a Bakry-Emery parameter ``q`` and an
outer-region threshold ``rho0``.  For each theorem the hypotheses are
evaluated pointwise on a radius grid and the conclusions are checked with
both sides computed from closed forms.

Margins are oriented so that a non-negative value means "satisfied" and are
normalised by ``max(1, |lhs|, |rhs|)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import expr as E
from .capacity import (
    Parabolicity,
    capacity_at_infinity,
    flux_ratio,
    generalized_density,
    generalized_quotient,
)
from .errors import ScenarioError
from .model import WeightedModelSpace, power_density
from .profile import RadialProfile, WarpingFunction, integral_profile
from .quadrature import Status, cumulative_integral

ABS_TOL = 1e-9
REL_TOL = 1e-6
DEFAULT_GRID = (0.05, 10.0, 64)


class Theorem(str, Enum):
    """Comparison statements, named by hypothesis type and conclusion."""

    BAKRY_EMERY_VOLUME = "bakry-emery-volume"
    BAKRY_EMERY_CAPACITY = "bakry-emery-capacity"
    RICCI_VOLUME = "ricci-volume"
    SECTIONAL_VOLUME = "sectional-volume"
    RICCI_CAPACITY = "ricci-capacity"
    SECTIONAL_CAPACITY = "sectional-capacity"
    Q_VOLUME = "q-volume"
    Q_CAPACITY = "q-capacity"
    Q_RIEMANNIAN_CAPACITY = "q-riemannian-capacity"


NEEDS_THETA = {
    Theorem.BAKRY_EMERY_VOLUME, Theorem.BAKRY_EMERY_CAPACITY, Theorem.RICCI_VOLUME,
    Theorem.SECTIONAL_VOLUME, Theorem.RICCI_CAPACITY, Theorem.SECTIONAL_CAPACITY,
    Theorem.Q_RIEMANNIAN_CAPACITY,
}
NEEDS_Q = {Theorem.Q_VOLUME, Theorem.Q_CAPACITY, Theorem.Q_RIEMANNIAN_CAPACITY}
CAPACITY_THEOREMS = {
    Theorem.BAKRY_EMERY_CAPACITY, Theorem.RICCI_CAPACITY, Theorem.SECTIONAL_CAPACITY,
    Theorem.Q_CAPACITY, Theorem.Q_RIEMANNIAN_CAPACITY,
}
# theorems whose bound on the weight derivative only holds outside B_{rho0}
OUTER_REGION = {Theorem.RICCI_CAPACITY, Theorem.SECTIONAL_CAPACITY, Theorem.Q_RIEMANNIAN_CAPACITY}


def default_radii(domain_sup: float = math.inf) -> np.ndarray:
    lo, hi, n = DEFAULT_GRID
    if math.isfinite(domain_sup):
        hi = min(hi, 0.99 * domain_sup)
    return np.geomspace(lo, hi, n)


@dataclass(frozen=True)
class IntrinsicScenario:
    ambient: WeightedModelSpace
    comp_w: WarpingFunction
    theta: RadialProfile | None = None
    q: float | None = None
    rho0: float = 0.0
    radii: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        radii = default_radii(self.ambient.domain_sup) if self.radii is None else np.asarray(self.radii, dtype=float)
        if radii.ndim != 1 or radii.size == 0 or not np.all(np.diff(radii) > 0):
            raise ScenarioError("radii must be a non-empty strictly increasing list")
        if not np.all((radii > 0) & (radii < self.ambient.domain_sup)):
            raise ScenarioError("radii must lie inside the ambient domain")
        object.__setattr__(self, "radii", radii)
        if self.q is not None and not self.q > 0:
            raise ScenarioError("q must be positive")
        if self.rho0 < 0:
            raise ScenarioError("rho0 must be non-negative")

    @property
    def m(self) -> int:
        return self.ambient.m

    def comparison_model(self, lower: float = 0.0) -> WeightedModelSpace:
        """The (w, f)-model with ``f = int_lower^r theta`` (re-anchored at the pole)."""
        f = integral_profile(self.theta, lower) if self.theta is not None else None
        return WeightedModelSpace(self.m, self.comp_w, f) if f is not None else WeightedModelSpace(self.m, self.comp_w)

    def describe(self) -> dict:
        return {
            "ambient": self.ambient.describe(),
            "comparison_w": self.comp_w.text,
            "theta": None if self.theta is None else self.theta.text,
            "q": self.q,
            "rho0": self.rho0,
            "radii": [float(x) for x in self.radii],
        }


# --------------------------------------------------------------------------
# pointwise bounds


def _eta(w: WarpingFunction, r) -> np.ndarray:
    j = w.profile.jet(np.atleast_1d(np.asarray(r, dtype=float)))
    return j.d1 / j.v


def _scalar(x, r):
    return float(x[0]) if np.ndim(r) == 0 else x


def laplacian_bound(sc: IntrinsicScenario, variant: str, r):
    """Upper bound for the weighted Laplacian of the distance.

    ``variant="q"``: ``(m+q-1) w'/w``; ``variant="infinity"``: ``(m-1) w'/w + theta``.
    """
    m = sc.m
    eta = _eta(sc.comp_w, r)
    if variant == "q":
        if sc.q is None:
            raise ScenarioError("variant q needs a q value")
        return _scalar((m + sc.q - 1.0) * eta, r)
    if variant == "infinity":
        if sc.theta is None:
            raise ScenarioError("variant infinity needs theta")
        return _scalar((m - 1.0) * eta + sc.theta.jet(np.atleast_1d(r)).v, r)
    raise ValueError(f"unknown variant {variant!r}")


def hessian_bound(sc: IntrinsicScenario, variant: str, r):
    """Upper bound for ``Hess r(x, x) + <grad h, grad r>/(m-1)`` on unit ``x`` orthogonal to ``grad r``."""
    m = sc.m
    eta = _eta(sc.comp_w, r)
    if variant == "q":
        if sc.q is None:
            raise ScenarioError("variant q needs a q value")
        return _scalar((m + sc.q - 1.0) / (m - 1.0) * eta, r)
    if variant == "infinity":
        if sc.theta is None:
            raise ScenarioError("variant infinity needs theta")
        return _scalar(eta + sc.theta.jet(np.atleast_1d(r)).v / (m - 1.0), r)
    raise ValueError(f"unknown variant {variant!r}")


def hessian_bound_vector(sc: IntrinsicScenario, r, y_norm_sq, y_radial, h_radial):
    """Bound for ``Hess r(y, y)`` at an arbitrary vector ``y`` under the q-weighted hypothesis.

    ``y_radial`` is ``<y, grad r>`` and ``h_radial`` is ``<grad h, grad r>`` at the point.
    """
    m = sc.m
    if sc.q is None:
        raise ScenarioError("the vector form needs a q value")
    factor = (m + sc.q - 1.0) / (m - 1.0) * _eta(sc.comp_w, r) - np.asarray(h_radial) / (m - 1.0)
    return _scalar((np.asarray(y_norm_sq) - np.asarray(y_radial) ** 2) * factor, r)


# --------------------------------------------------------------------------
# reports


class VerdictKind(str, Enum):
    PASS = "Pass"
    HYPOTHESIS_FAIL = "HypothesisFail"
    INEQUALITY_VIOLATION = "InequalityViolation"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    radius: float | None = None
    margin: float | None = None
    clause: str | None = None

    def __str__(self) -> str:
        if self.kind is VerdictKind.PASS:
            return "Pass"
        if self.kind is VerdictKind.INCONCLUSIVE:
            return f"Inconclusive({self.clause})"
        if self.kind is VerdictKind.HYPOTHESIS_FAIL:
            return f"HypothesisFail(r={self.radius:.12g}, clause={self.clause})"
        return f"InequalityViolation(r={self.radius:.12g}, margin={self.margin:.12g}, clause={self.clause})"


@dataclass(frozen=True)
class Implication:
    """``premise => conclusion``; violated only when the premise holds and the conclusion fails."""

    premise: bool | None
    conclusion: bool | None

    @property
    def holds(self) -> bool | None:
        if self.premise is None or (self.premise and self.conclusion is None):
            return None
        return (not self.premise) or bool(self.conclusion)


@dataclass
class ComparisonReport:
    theorem: Theorem | str
    radii: np.ndarray
    hypothesis_margins: dict[str, np.ndarray]
    inequality_margins: dict[str, np.ndarray]
    sides: dict[str, tuple[np.ndarray, np.ndarray]]
    implications: dict[str, Implication]
    verdict: Verdict
    tolerances: dict[str, float]
    notes: list[str] = field(default_factory=list)
    pairs: np.ndarray | None = None

    @property
    def passed(self) -> bool:
        return self.verdict.kind is VerdictKind.PASS

    def min_inequality_margin(self) -> float:
        vals = [np.nanmin(v) for v in self.inequality_margins.values() if np.any(np.isfinite(v))]
        return float(min(vals)) if vals else math.nan


def margin(lhs, rhs, sense: str) -> np.ndarray:
    """Normalised margin of ``lhs <= rhs`` (sense "le") or ``lhs >= rhs`` (sense "ge")."""
    lhs = np.asarray(lhs, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    diff = rhs - lhs if sense == "le" else lhs - rhs
    scale = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
    with np.errstate(invalid="ignore"):
        out = diff / scale
    # equal infinities (e.g. both volumes infinite) compare as equal
    out = np.where((lhs == rhs), 0.0, out)
    return out


def _threshold(tol: float) -> float:
    return -(ABS_TOL + tol)


def _first_failure(margins: dict[str, np.ndarray], radii: np.ndarray, tol: float):
    """Smallest radius (then clause order) with a margin below the threshold."""
    worst = None
    for name, vals in margins.items():
        vals = np.asarray(vals, dtype=float)
        bad = np.isfinite(vals) & (vals < _threshold(tol))
        if not np.any(bad):
            continue
        i = int(np.argmax(bad))
        # per-pair margins (annuli) are not indexed by the radius grid
        radius = float(radii[i]) if vals.size == radii.size else math.inf
        if worst is None or radius < worst[0]:
            worst = (radius, float(vals[i]), name)
    return worst


# --------------------------------------------------------------------------
# hypotheses


def _require(sc: IntrinsicScenario, thm: Theorem) -> None:
    if thm in NEEDS_THETA and sc.theta is None:
        raise ScenarioError(f"{thm.value} needs a theta profile")
    if thm in NEEDS_Q and sc.q is None:
        raise ScenarioError(f"{thm.value} needs a q value")
    if thm in CAPACITY_THEOREMS and math.isfinite(sc.ambient.domain_sup):
        raise ScenarioError(f"{thm.value} needs an ambient model with unbounded domain")


def check_hypotheses(sc: IntrinsicScenario, thm: Theorem | str) -> dict[str, np.ndarray]:
    """Per-radius hypothesis margins; ``nan`` marks radii where a clause does not apply."""
    thm = Theorem(thm)
    _require(sc, thm)
    r = sc.radii
    M = sc.ambient
    m = sc.m
    comp = WeightedModelSpace(m, sc.comp_w)
    out: dict[str, np.ndarray] = {}
    hj = M.f.jet(r)
    h1 = hj.d1
    outer = r >= sc.rho0 if thm in OUTER_REGION else np.ones_like(r, dtype=bool)
    theta = sc.theta.jet(np.where(outer, r, max(sc.rho0, r[-1]))) if sc.theta is not None else None

    if thm in (Theorem.BAKRY_EMERY_VOLUME, Theorem.BAKRY_EMERY_CAPACITY):
        out["ricci_inf_lower"] = margin(M.radial_ric_h(r), comp.radial_ric(r), "ge")
        w1 = sc.comp_w.profile.jet(r).d1
        out["weight_derivative_weighted"] = margin(h1 * w1, theta.v * w1, "le")
        out["theta_nondecreasing"] = margin(theta.d1, 0.0, "ge")
    elif thm in (Theorem.RICCI_VOLUME, Theorem.RICCI_CAPACITY):
        out["ricci_lower"] = margin(M.radial_ric(r), comp.radial_ric(r), "ge")
        out["weight_derivative_upper"] = np.where(outer, margin(h1, theta.v, "le"), np.nan)
    elif thm in (Theorem.SECTIONAL_VOLUME, Theorem.SECTIONAL_CAPACITY):
        out["sectional_upper"] = margin(M.radial_sec(r), comp.radial_sec(r), "le")
        out["weight_derivative_lower"] = np.where(outer, margin(h1, theta.v, "ge"), np.nan)
    else:
        bound = -(m + sc.q - 1.0) * sc.comp_w.profile.jet(r).d2 / sc.comp_w.profile.jet(r).v
        out["ricci_q_lower"] = margin(M.radial_ric_h(r, sc.q), bound, "ge")
        if thm is Theorem.Q_RIEMANNIAN_CAPACITY:
            out["weight_derivative_lower"] = np.where(outer, margin(h1, theta.v, "ge"), np.nan)
    return out


# --------------------------------------------------------------------------
# conclusions


def _volume_conclusions(sc: IntrinsicScenario, sense_q: str, notes: list[str]):
    r = sc.radii
    M = sc.ambient
    comp = sc.comparison_model(0.0)
    qM, qf = M.iso_quotient(r), comp.iso_quotient(r)
    vM, vf = M.volume_ball(r), comp.volume_ball(r)
    aM, af = M.area_sphere(r), comp.area_sphere(r)
    other = "le" if sense_q == "ge" else "ge"
    sides = {"quotient": (qM, qf), "volume": (vM, vf), "area": (aM, af)}
    margins = {
        "quotient": margin(qM, qf, sense_q),
        "volume": margin(vM, vf, other),
        "area": margin(aM, af, other),
    }
    with np.errstate(invalid="ignore", divide="ignore"):
        F = vM / vf
    mono = np.full_like(r, np.nan)
    # F = Vol_h / Vol_f is non-increasing (resp. non-decreasing for the reversed comparison)
    mono[:-1] = margin(F[1:], F[:-1], "le" if sense_q == "ge" else "ge")
    margins["volume_ratio_monotone"] = mono
    sides["volume_ratio"] = (F, F)
    notes.append("comparison weight f = int_0^r theta")
    return margins, sides, {}


def _annulus_pairs(r: np.ndarray, lo: float) -> list[tuple[int, np.ndarray]]:
    pairs = []
    for i, rho in enumerate(r):
        if rho < lo:
            continue
        js = np.flatnonzero(r >= 2.0 * rho)
        if js.size:
            pairs.append((i, js))
    return pairs


def _annulus_ratios(dens, rho: float, Rs: np.ndarray) -> np.ndarray:
    log_at = float(dens.log(np.array([rho]))[0])
    D = cumulative_integral(dens.shifted(log_at), rho, Rs, tol=0.0, rtol=1e-13)
    return 1.0 / D


def _capacity_conclusions(sc: IntrinsicScenario, thm: Theorem, notes: list[str]):
    r = sc.radii
    M = sc.ambient
    m = sc.m
    lo = sc.rho0 if thm in OUTER_REGION else 0.0
    active = r >= lo

    # comparison resistance density and ambient density
    if thm is Theorem.Q_CAPACITY:
        def comp_density(rho):
            return generalized_density(sc.comp_w, m + sc.q, None, rho)
        amb = M
        sense = "le"
        notes.append("comparison integrand w^(1-m-q)")
    elif thm is Theorem.Q_RIEMANNIAN_CAPACITY:
        neg_theta = RadialProfile(_neg(sc.theta.expr))

        def comp_density(rho):
            return generalized_density(sc.comp_w, m + sc.q, neg_theta, rho)
        amb = M.unweighted()
        sense = "le"
        notes.append("ambient side is the unweighted capacity; comparison integrand w^(1-m-q) e^(-f), f = -int_rho0^r theta")
    else:
        F = integral_profile(sc.theta, lo)
        comp_res = power_density(sc.comp_w, 1 - m, F, -1.0)

        def comp_density(rho):
            return comp_res
        amb = M
        sense = "ge" if thm is Theorem.SECTIONAL_CAPACITY else "le"
        notes.append(f"comparison weight f = int_{lo:g}^r theta")

    amb_res = amb.resistance_density()
    lhs = np.full_like(r, np.nan)
    rhs = np.full_like(r, np.nan)
    inconclusive = False
    for i in np.flatnonzero(active):
        rho = float(r[i])
        lv, lt = flux_ratio(amb_res, rho)
        rv, rt = flux_ratio(comp_density(rho), rho)
        lhs[i], rhs[i] = lv, rv
        inconclusive |= Status.INCONCLUSIVE in (lt.status, rt.status)
    margins = {"capacity_area_ratio": np.where(active, margin(lhs, rhs, sense), np.nan)}
    sides = {"capacity_area_ratio": (lhs, rhs)}

    # finite annuli B_R - B_rho with R >= 2 rho
    pair_list, amarg = [], []
    for i, js in _annulus_pairs(r, lo):
        rho = float(r[i])
        la = _annulus_ratios(amb_res, rho, r[js])
        ra = _annulus_ratios(comp_density(rho), rho, r[js])
        pair_list.extend((rho, float(R)) for R in r[js])
        amarg.append(margin(la, ra, sense))
    if amarg:
        margins["annulus_capacity_area_ratio"] = np.concatenate(amarg)

    implications: dict[str, Implication] = {}
    # capacities themselves (rho0 = 0 variants carry the constant e^{h(o)} = 1)
    if thm is Theorem.BAKRY_EMERY_CAPACITY or (thm in (Theorem.RICCI_CAPACITY, Theorem.SECTIONAL_CAPACITY) and sc.rho0 == 0):
        comp = sc.comparison_model(0.0)
        capM = np.array([capacity_at_infinity(M, float(x)).value for x in r])
        capf = np.array([capacity_at_infinity(comp, float(x)).value for x in r])
        margins["capacity"] = margin(capM, capf, sense)
        sides["capacity"] = (capM, capf)

    # parabolicity transfer
    base = lo if lo > 0 else float(r[0])
    comp_tail = flux_ratio(comp_density(base), base)[1]
    amb_verdict = capacity_at_infinity(amb, float(r[0])).verdict.status
    if thm is Theorem.SECTIONAL_CAPACITY:
        premise = None if comp_tail.status is Status.INCONCLUSIVE else comp_tail.status is Status.CONVERGES
        concl = None if amb_verdict is Parabolicity.INCONCLUSIVE else amb_verdict is Parabolicity.HYPERBOLIC
        implications["comparison_hyperbolic_implies_ambient_hyperbolic"] = Implication(premise, concl)
    else:
        premise = None if comp_tail.status is Status.INCONCLUSIVE else comp_tail.status is Status.DIVERGES
        concl = None if amb_verdict is Parabolicity.INCONCLUSIVE else amb_verdict is Parabolicity.PARABOLIC
        implications["comparison_parabolic_implies_ambient_parabolic"] = Implication(premise, concl)
    if inconclusive:
        notes.append("some tail integrals were inconclusive")
    return margins, sides, implications, np.array(pair_list) if pair_list else None, inconclusive


def _neg(node):
    return E.mul(E.Num(-1.0), node)


def verify_intrinsic(sc: IntrinsicScenario, thm: Theorem | str, tol: float = REL_TOL) -> ComparisonReport:
    """Check hypotheses and conclusions of one comparison theorem on the scenario's grid.

    Inequality margins are computed even when a hypothesis fails, so that
    the report shows how the conclusion behaves; the verdict then is
    ``HypothesisFail``.
    """
    thm = Theorem(thm)
    hyp = check_hypotheses(sc, thm)
    notes: list[str] = []
    pairs = None
    inconclusive = False
    if thm in (Theorem.BAKRY_EMERY_VOLUME, Theorem.RICCI_VOLUME):
        ineq, sides, impl = _volume_conclusions(sc, "ge", notes)
    elif thm is Theorem.SECTIONAL_VOLUME:
        ineq, sides, impl = _volume_conclusions(sc, "le", notes)
    elif thm is Theorem.Q_VOLUME:
        qM = sc.ambient.iso_quotient(sc.radii)
        qw = generalized_quotient(sc.comp_w, sc.m + sc.q, sc.radii)
        ineq, sides, impl = {"quotient": margin(qM, qw, "ge")}, {"quotient": (qM, qw)}, {}
    else:
        ineq, sides, impl, pairs, inconclusive = _capacity_conclusions(sc, thm, notes)
    if thm in (Theorem.BAKRY_EMERY_VOLUME, Theorem.BAKRY_EMERY_CAPACITY):
        notes.append("weight-derivative clause checked in its w'-weighted form")

    hfail = _first_failure(hyp, sc.radii, tol)
    ifail = _first_failure(ineq, sc.radii, tol)
    broken = [k for k, v in impl.items() if v.holds is False]
    if hfail is not None:
        verdict = Verdict(VerdictKind.HYPOTHESIS_FAIL, hfail[0], hfail[1], hfail[2])
    elif ifail is not None:
        verdict = Verdict(VerdictKind.INEQUALITY_VIOLATION, ifail[0], ifail[1], ifail[2])
    elif broken:
        verdict = Verdict(VerdictKind.INEQUALITY_VIOLATION, math.nan, math.nan, broken[0])
    elif inconclusive or any(v.holds is None for v in impl.values()):
        verdict = Verdict(VerdictKind.INCONCLUSIVE, clause="tail integral")
    else:
        verdict = Verdict(VerdictKind.PASS)
    return ComparisonReport(
        theorem=thm,
        radii=sc.radii,
        hypothesis_margins=hyp,
        inequality_margins=ineq,
        sides=sides,
        implications=impl,
        verdict=verdict,
        tolerances={"abs": ABS_TOL, "rel": tol},
        notes=notes,
        pairs=pairs,
    )
