"""Command-line front end.

Every subcommand reads a JSON scenario file with the sections ``model``,
``comparison``, ``action``, ``output`` and, for ``extrinsic``,
``submanifold``.  Command-line flags override the file.  Reports start by
echoing the fully resolved scenario so a run can be reproduced from its
output alone.

Exit codes: 0 success, 1 inequality violation, 2 inconclusive or
hypothesis not met, 3 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .asymptotics import AsymptoticOrder
from .capacity import (
    Parabolicity,
    capacity_at_infinity,
    classify_parabolicity,
    exit_time_transplant,
    potential,
)
from .comparison import DEFAULT_GRID, REL_TOL, IntrinsicScenario, Theorem, VerdictKind, verify_intrinsic
from .errors import ScenarioError, WGeomError
from .extrinsic import (
    Direction,
    SubmanifoldProfile,
    check_balance,
    check_bounded_mean_curvature_criterion,
    check_h_minimal_hypersurface_criterion,
    check_minimal_submanifold_hyperbolicity,
    classify_submanifold,
    induced_classification,
    mean_curvature_relation_check,
    totally_geodesic_submodel,
    verify_simpson,
)
from .model import WeightedModelSpace
from .oracle import convergence_order, minimize_dirichlet_energy, solve_exit_time, solve_radial_bvp
from .profile import RadialProfile, WarpingFunction, constant_profile, exponential_warping, make_warping, parse_profile, space_form_warping

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT = 3

DIGITS = 12
ORACLE_TOL = 1e-3
CSV_COLUMNS = ("r", "Vol_h", "Area_h", "q_iso", "Cap_to_infinity", "verdict_flags")


class InputError(WGeomError):
    pass


def fmt(x) -> str:
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.{DIGITS}g}"


# --------------------------------------------------------------------------
# scenario parsing


def _asym(raw) -> AsymptoticOrder | None:
    if raw is None:
        return None
    try:
        return AsymptoticOrder(raw["kind"], float(raw["exponent"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioError(f"bad asymptotic order {raw!r}: {exc}") from exc


def parse_warping(raw) -> tuple[WarpingFunction, object]:
    """Warping from a JSON value; returns it with its resolved description."""
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        raise ScenarioError("a warping is an expression or an object, not a number")
    if isinstance(raw, str):
        return make_warping(raw), raw
    if isinstance(raw, dict):
        if "space_form" in raw:
            b = float(raw["space_form"])
            return space_form_warping(b), {"space_form": b}
        if "exponential" in raw:
            a = float(raw["exponential"])
            return exponential_warping(a), {"exponential": a}
        if "expr" in raw:
            dom = float(raw.get("domain_sup", math.inf))
            w = make_warping(raw["expr"], dom, _asym(raw.get("asym")))
            out = {"expr": raw["expr"]}
            if math.isfinite(dom):
                out["domain_sup"] = dom
            if raw.get("asym") is not None:
                out["asym"] = raw["asym"]
            return w, out
    raise ScenarioError(f"cannot read warping {raw!r}")


def parse_radial(raw, what: str) -> RadialProfile:
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        return constant_profile(float(raw))
    if isinstance(raw, str):
        return parse_profile(raw)
    if isinstance(raw, dict) and "expr" in raw:
        return parse_profile(raw["expr"], _asym(raw.get("asym")))
    raise ScenarioError(f"cannot read {what} {raw!r}")


def _radial_echo(raw):
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        return str(raw)
    return raw


@dataclass
class Resolved:
    data: dict
    model: WeightedModelSpace | None


def _number(section: dict, key: str, default=None, positive: bool = False):
    val = section.get(key, default)
    if val is None:
        return None
    try:
        val = float(val)
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"{key} must be a number, got {section.get(key)!r}") from exc
    if positive and not val > 0:
        raise ScenarioError(f"{key} must be positive")
    return val


def _grid_from(text_or_list) -> list[float]:
    if isinstance(text_or_list, str):
        parts = [p for p in text_or_list.replace(",", " ").split() if p]
        if len(parts) != 3:
            raise ScenarioError("--grid expects 'lo,hi,count'")
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        return _geom(lo, hi, n)
    if isinstance(text_or_list, dict):
        return _geom(float(text_or_list["lo"]), float(text_or_list["hi"]), int(text_or_list["count"]))
    return [float(x) for x in text_or_list]


def _geom(lo: float, hi: float, n: int) -> list[float]:
    if not (0 < lo < hi) or n < 1:
        raise ScenarioError("grid needs 0 < lo < hi and a positive count")
    return [float(x) for x in np.geomspace(lo, hi, n)]


def load_scenario(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read scenario {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be an object")
    return data


def resolve(raw: dict, args: argparse.Namespace) -> Resolved:
    """Fill defaults, apply command-line overrides and build the model."""
    data = {k: dict(raw.get(k) or {}) for k in ("model", "comparison", "action", "output", "submanifold")}
    model_sec, act, out = data["model"], data["action"], data["output"]
    act["command"] = args.command
    for key in ("rho", "R", "N", "theorem", "n", "check"):
        val = getattr(args, key, None)
        if val is not None:
            act[key] = val
    if getattr(args, "radii", None):
        act["radii"] = _grid_from(args.radii)
    if getattr(args, "grid", None):
        act["radii"] = _grid_from(args.grid)
    if args.tol is not None:
        out["tol"] = args.tol
    if args.csv is not None:
        out["csv_path"] = args.csv

    model = None
    if model_sec:
        if "m" not in model_sec or "w" not in model_sec:
            raise ScenarioError("model section needs m and w")
        m = model_sec["m"]
        if isinstance(m, bool) or not isinstance(m, (int, float)) or int(m) != m:
            raise ScenarioError(f"model dimension must be an integer, got {m!r}")
        w, w_echo = parse_warping(model_sec["w"])
        f_raw = model_sec.get("f", "0")
        f = parse_radial(f_raw, "weight")
        model = WeightedModelSpace(int(m), w, f)
        data["model"] = {"m": int(m), "w": w_echo, "f": _radial_echo(f_raw)}
    if "radii" in act:
        act["radii"] = _grid_from(act["radii"])
        if any(not x > 0 for x in act["radii"]):
            raise ScenarioError("radii must be positive")
    return Resolved(data, model)


def _need_model(res: Resolved) -> WeightedModelSpace:
    if res.model is None:
        raise ScenarioError("this command needs a model section (use --model FILE)")
    return res.model


def _tol(res: Resolved, default: float) -> float:
    return float(res.data["output"].setdefault("tol", default))


# --------------------------------------------------------------------------
# output helpers


class Printer:
    def __init__(self, quiet: bool, stream=None):
        self.quiet = quiet
        self.stream = stream or sys.stdout

    def echo(self, res: Resolved) -> None:
        if not self.quiet:
            clean = {k: v for k, v in res.data.items() if v}
            print("scenario: " + json.dumps(clean, sort_keys=True, default=float), file=self.stream)

    def line(self, key: str, value) -> None:
        if isinstance(value, (float, int, np.floating)) and not isinstance(value, bool):
            value = fmt(value)
        print(f"{key}: {value}" if not self.quiet else f"{value}", file=self.stream)

    def detail(self, key: str, value) -> None:
        if not self.quiet:
            self.line(key, value)


def _status_code(status: Parabolicity) -> int:
    return EXIT_INCONCLUSIVE if status is Parabolicity.INCONCLUSIVE else EXIT_OK


# --------------------------------------------------------------------------
# subcommands


def cmd_classify(res: Resolved, out: Printer) -> int:
    S = _need_model(res)
    rho = float(res.data["action"].setdefault("rho", 1.0))
    v = classify_parabolicity(S, rho)
    out.echo(res)
    out.line("verdict", v.status.value)
    out.detail("evidence", str(v.evidence))
    return _status_code(v.status)


def cmd_capacity(res: Resolved, out: Printer) -> int:
    S = _need_model(res)
    act = res.data["action"]
    rho = float(act.setdefault("rho", 1.0))
    R = act.get("R")
    out.echo(res)
    if R is None or math.isinf(float(R)):
        cap = capacity_at_infinity(S, rho)
        out.line("capacity", cap.value)
        out.detail("verdict", cap.status.value)
        return _status_code(cap.status)
    res_cap = potential(S, rho, float(R))
    out.line("capacity", res_cap.value)
    return EXIT_OK


def _radii(res: Resolved, S: WeightedModelSpace) -> np.ndarray:
    act = res.data["action"]
    if "radii" in act:
        r = np.asarray(act["radii"], dtype=float)
    elif "R" in act:
        r = np.atleast_1d(float(act["R"]))
    else:
        lo, hi, n = DEFAULT_GRID
        if math.isfinite(S.domain_sup):
            hi = min(hi, 0.99 * S.domain_sup)
        r = np.geomspace(lo, hi, n)
    act["radii"] = [float(x) for x in r]
    return r


def cmd_volume(res: Resolved, out: Printer) -> int:
    S = _need_model(res)
    r = _radii(res, S)
    vol, area = S.volume_ball(r), S.area_sphere(r)
    out.echo(res)
    for x, v, a in zip(r, vol, area):
        out.line(f"R={fmt(x)}", f"Vol_h={fmt(v)} Area_h={fmt(a)}")
    return EXIT_OK


def cmd_quotient(res: Resolved, out: Printer) -> int:
    S = _need_model(res)
    r = _radii(res, S)
    qv = S.iso_quotient(r)
    out.echo(res)
    for x, v in zip(r, qv):
        out.line(f"R={fmt(x)}", fmt(v))
    return EXIT_OK


def cmd_exit_time(res: Resolved, out: Printer) -> int:
    S = _need_model(res)
    act = res.data["action"]
    R = float(act.setdefault("R", 1.0))
    et = exit_time_transplant(S, R)
    s = np.asarray(act.get("radii", []), dtype=float)
    if np.any((s < 0) | (s > R)):
        raise ScenarioError(f"exit-time radii must lie in [0, {fmt(R)}]")
    out.echo(res)
    out.line("exit_time_at_pole", et(0.0))
    for x, v in zip(s, np.atleast_1d(et(s))):
        out.line(f"s={fmt(x)}", fmt(v))
    out.detail("ode_residual", et.residual())
    return EXIT_OK


def _scenario(res: Resolved) -> IntrinsicScenario:
    S = _need_model(res)
    comp = res.data["comparison"]
    if "w" not in comp:
        raise ScenarioError("compare needs a comparison section with w")
    cw, cw_echo = parse_warping(comp["w"])
    theta = parse_radial(comp["theta"], "theta") if comp.get("theta") is not None else None
    q = _number(comp, "q")
    if q is not None and math.isinf(q):
        q = None
    rho0 = _number(comp, "rho0", 0.0)
    radii = res.data["action"].get("radii")
    sc = IntrinsicScenario(S, cw, theta, q, rho0, None if radii is None else np.asarray(radii, dtype=float))
    res.data["comparison"] = {"w": cw_echo, "theta": _radial_echo(comp.get("theta")), "q": q, "rho0": rho0}
    res.data["action"]["radii"] = [float(x) for x in sc.radii]
    return sc


def _report_code(kind: VerdictKind) -> int:
    return {
        VerdictKind.PASS: EXIT_OK,
        VerdictKind.INEQUALITY_VIOLATION: EXIT_VIOLATION,
        VerdictKind.HYPOTHESIS_FAIL: EXIT_INCONCLUSIVE,
        VerdictKind.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }[kind]


def _print_report(rep, out: Printer) -> None:
    out.line("verdict", str(rep.verdict))
    for name, vals in rep.hypothesis_margins.items():
        out.detail(f"hypothesis {name} min_margin", float(np.nanmin(vals)) if np.any(np.isfinite(vals)) else math.nan)
    for name, vals in rep.inequality_margins.items():
        out.detail(f"inequality {name} min_margin", float(np.nanmin(vals)) if np.any(np.isfinite(vals)) else math.nan)
    for name, (lhs, rhs) in rep.sides.items():
        lhs, rhs = np.atleast_1d(lhs), np.atleast_1d(rhs)
        first = np.flatnonzero(np.isfinite(lhs) & np.isfinite(rhs))
        if first.size:
            i = int(first[0])
            out.detail(f"sides {name} at r={fmt(rep.radii[i])}", f"lhs={fmt(lhs[i])} rhs={fmt(rhs[i])}")
    for name, imp in rep.implications.items():
        out.detail(f"implication {name}", f"premise={imp.premise} conclusion={imp.conclusion} holds={imp.holds}")
    for note in rep.notes:
        out.detail("note", note)


def cmd_compare(res: Resolved, out: Printer) -> int:
    thm = res.data["action"].get("theorem")
    if thm is None:
        raise ScenarioError("compare needs a theorem (action.theorem or --theorem)")
    try:
        thm = Theorem(thm)
    except ValueError as exc:
        names = ", ".join(t.value for t in Theorem)
        raise ScenarioError(f"unknown theorem {thm!r}; choose from {names}") from exc
    sc = _scenario(res)
    tol = _tol(res, REL_TOL)
    rep = verify_intrinsic(sc, thm, tol)
    out.echo(res)
    _print_report(rep, out)
    return _report_code(rep.verdict.kind)


def _profile(res: Resolved) -> tuple[SubmanifoldProfile, WarpingFunction, dict]:
    sub = res.data["submanifold"]
    if "n" not in sub or "psi" not in sub:
        raise ScenarioError("submanifold section needs n and psi")
    w_raw = sub.get("w", res.data["model"].get("w") if res.data["model"] else None)
    if w_raw is None:
        raise ScenarioError("submanifold section needs a comparison warping w")
    w, w_echo = parse_warping(w_raw)
    prof = SubmanifoldProfile(
        int(sub["n"]),
        parse_radial(sub["psi"], "psi"),
        parse_radial(sub.get("phiH", 0.0), "phiH"),
        float(sub.get("rho", 1.0)),
        Direction(sub.get("direction", "upper")),
    )
    echo = dict(sub)
    echo.update({"w": w_echo, "phiH": _radial_echo(sub.get("phiH", 0.0)), "rho": prof.rho,
                 "direction": prof.direction.value})
    res.data["submanifold"] = echo
    return prof, w, echo


def cmd_extrinsic(res: Resolved, out: Printer) -> int:
    act = res.data["action"]
    check = act.setdefault("check", "submodel")
    tol = _tol(res, REL_TOL)
    if check == "submodel":
        S = _need_model(res)
        n = int(act.setdefault("n", S.m - 1))
        sub = totally_geodesic_submodel(S, n)
        r = _radii(res, S)
        rep = verify_simpson(sub, r, tol)
        rel = mean_curvature_relation_check(sub, r)
        cls = classify_submanifold(sub.equality_profile(1.0), S.w)
        intrinsic = induced_classification(sub)
        out.echo(res)
        _print_report(rep, out)
        out.detail("mean_curvature_relation max_residual", rel.max_residual)
        out.detail("profile classification", cls.status.value)
        out.detail("induced model classification", intrinsic.status.value)
        agree = cls.status is intrinsic.status
        out.detail("classifications agree", agree)
        code = _report_code(rep.verdict.kind)
        return code if agree else max(code, EXIT_VIOLATION)
    if check == "minimal-hyperbolicity":
        b = _number(act, "b", 0.0)
        eps = _number(act, "eps", positive=True)
        n = int(act.get("n", 3))
        rho = _number(act, "rho", 1.0, positive=True)
        if eps is None:
            raise ScenarioError("minimal-hyperbolicity needs eps")
        result = check_minimal_submanifold_hyperbolicity(b, n, eps, rho)
        out.echo(res)
        return _criterion(result, out)
    if check == "minimal-hypersurface":
        S = _need_model(res)
        q = _number(act, "q", positive=True)
        if q is None:
            raise ScenarioError("minimal-hypersurface needs q")
        rho = _number(act, "rho", 1.0, positive=True)
        result = check_h_minimal_hypersurface_criterion(S.w, S.f, S.m, q, rho)
        out.echo(res)
        return _criterion(result, out)
    prof, w, _ = _profile(res)
    m = res.data["model"].get("m") if res.data["model"] else act.get("m")
    q = _number(act, "q")
    if check == "bounded-mean-curvature":
        c = _number(act, "c", positive=False)
        if c is None:
            raise ScenarioError("bounded-mean-curvature needs c")
        result = check_bounded_mean_curvature_criterion(prof, w, c)
        out.echo(res)
        return _criterion(result, out)
    if check in ("simpson", "sub_parabolicity", "sub_q"):
        grid = act.get("radii")
        bm = check_balance(check, prof, w, grid, m=m, q=q, tol=tol)
        act["radii"] = [float(x) for x in bm.radii]
        out.echo(res)
        out.line("balance", "Pass" if bm.passed else f"Fail(r={fmt(bm.first_failure())})")
        out.detail("min_margin", bm.min_margin)
        return EXIT_OK if bm.passed else EXIT_INCONCLUSIVE
    if check in ("classify", "classify-q"):
        variant = "sec" if check == "classify" else "q_weighted"
        cls = classify_submanifold(prof, w, variant, m=m, q=q, tol=tol)
        out.echo(res)
        out.line("verdict", cls.status.value)
        out.detail("evidence", str(cls.verdict.evidence))
        out.detail("capacity_ratio_bound", cls.capacity_ratio_bound)
        out.detail("balance", "Pass" if cls.balance.passed else "Fail")
        out.detail("conclusive", cls.conclusive)
        for item in cls.unverifiable:
            out.detail("unverifiable premise", item)
        return EXIT_OK if cls.conclusive else EXIT_INCONCLUSIVE
    raise ScenarioError(f"unknown extrinsic check {check!r}")


def _criterion(result, out: Printer) -> int:
    out.line("verdict", result.status)
    for k, v in result.premises.items():
        out.detail(f"premise {k}", v)
    if math.isfinite(result.rho_used):
        out.detail("rho_used", result.rho_used)
    if result.classification is not None:
        out.detail("evidence", str(result.classification.verdict.evidence))
    return EXIT_OK if result.status in ("Parabolic", "Hyperbolic") else EXIT_INCONCLUSIVE


def cmd_oracle(res: Resolved, out: Printer) -> int:
    S = _need_model(res)
    act = res.data["action"]
    rho = float(act.setdefault("rho", 1.0))
    R = float(act.setdefault("R", 2.0))
    N = int(act.setdefault("N", 4096))
    tol = _tol(res, ORACLE_TOL)
    exact = potential(S, rho, R).value
    em = minimize_dirichlet_energy(S, rho, R, N)
    bvp = solve_radial_bvp(S, rho, R, N)
    rel = abs(em.energy - exact) / exact
    Ns = [N // 8, N // 4, N // 2, N]
    errs = [abs(minimize_dirichlet_energy(S, rho, R, k).energy - exact) / exact for k in Ns]
    order = convergence_order(Ns, errs) if min(errs) > 0 else math.inf
    out.echo(res)
    out.line("relative_error", rel)
    out.detail("capacity_closed_form", exact)
    out.detail("capacity_energy_minimum", em.energy)
    out.detail("capacity_flux_bvp", bvp.capacity)
    out.detail("convergence_order", order)
    if R < S.domain_sup:
        et = exit_time_transplant(S, R)
        grid = solve_exit_time(S, R, N)
        out.detail("exit_time_sup_error", grid.sup_distance(et))
    return EXIT_OK if rel <= tol else EXIT_VIOLATION


def _sweep_rows(res: Resolved) -> list[list[str]]:
    S = _need_model(res)
    r = _radii(res, S)
    vol = np.atleast_1d(S.volume_ball(r))
    area = np.atleast_1d(S.area_sphere(r))
    qv = np.atleast_1d(S.iso_quotient(r))
    report = None
    thm = res.data["action"].get("theorem")
    if res.data["comparison"] and thm is not None:
        report = verify_intrinsic(_scenario(res), Theorem(thm), _tol(res, REL_TOL))
    rows = []
    complete = not math.isfinite(S.domain_sup)
    for i, x in enumerate(r):
        flags = []
        if complete:
            cap = capacity_at_infinity(S, float(x))
            cap_val = cap.value
            flags.append(cap.status.value)
        else:
            cap_val = math.nan
            flags.append("bounded-domain")
        if report is not None:
            ok = True
            for vals in report.inequality_margins.values():
                vals = np.asarray(vals)
                if vals.size == r.size and np.isfinite(vals[i]) and vals[i] < -(1e-9 + report.tolerances["rel"]):
                    ok = False
            flags.append(f"{report.theorem.value}={'ok' if ok else 'violated'}")
        rows.append([fmt(x), fmt(vol[i]), fmt(area[i]), fmt(qv[i]), fmt(cap_val), "|".join(flags)])
    return rows


def cmd_sweep(res: Resolved, out: Printer) -> int:
    rows = _sweep_rows(res)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)
    text = buf.getvalue()
    path = res.data["output"].get("csv_path")
    out.echo(res)
    if path:
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {path}: {exc}") from exc
        out.line("csv", path)
    else:
        sys.stdout.write(text)
    violated = any("violated" in row[-1] for row in rows)
    return EXIT_VIOLATION if violated else EXIT_OK


COMMANDS = {
    "classify": (cmd_classify, "parabolic or hyperbolic, by the tail integral of the inverse area"),
    "capacity": (cmd_capacity, "capacity of an annulus (--rho, --R) or of a ball to infinity (--rho)"),
    "volume": (cmd_volume, "weighted ball volumes and sphere areas"),
    "quotient": (cmd_quotient, "volume-to-area quotient"),
    "exit-time": (cmd_exit_time, "mean exit time of a ball"),
    "compare": (cmd_compare, "check one comparison theorem between two models"),
    "extrinsic": (cmd_extrinsic, "sub-model and submanifold-profile checks"),
    "oracle": (cmd_oracle, "closed form against the discrete energy minimum"),
    "sweep": (cmd_sweep, "per-radius CSV of volumes, areas, quotients and capacities"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 by default
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", "--scenario", dest="scenario", metavar="FILE", help="scenario JSON file")
    common.add_argument("--tol", type=float, help="relative tolerance override")
    common.add_argument("--grid", help="radii as 'lo,hi,count' (geometric spacing)")
    common.add_argument("--quiet", action="store_true", help="print results only")
    common.add_argument("--csv", metavar="PATH", help="CSV output path (sweep)")
    common.add_argument("--rho", type=float)
    common.add_argument("--R", type=float)
    common.add_argument("--N", type=int, help="number of grid cells (oracle)")
    common.add_argument("--radii", help="comma-separated radii")
    common.add_argument("--theorem", help="comparison theorem id (compare, sweep)")
    common.add_argument("--n", type=int, help="sub-model dimension (extrinsic)")
    common.add_argument("--check", help="extrinsic check name")

    parser = _Parser(prog="wgeom", description="Weighted model-space geometry checks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        subs.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "radii", None):
            args.radii = [float(x) for x in args.radii.split(",") if x.strip()]
        res = resolve(load_scenario(args.scenario), args)
        handler = COMMANDS[args.command][0]
        return handler(res, Printer(args.quiet))
    except (WGeomError, ValueError, KeyError) as exc:
        msg = str(exc).replace("\n", " ")
        print(f"wgeom-error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_INPUT


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
