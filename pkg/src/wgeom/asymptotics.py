"""Leading-order behaviour of profiles as r -> infinity.

Two representations are derived from an expression tree:

* :class:`Growth` -- ``node ~ coef * exp(gauss*r^2 + expo*r) * r^power``;
* :class:`LogPoly` -- ``node = a2*r^2 + a1*r + b*log(r) + a0 + o(1)``, the
  form a log-weight must have for ``exp(node)`` to have a known growth.

:class:`AsymptoticOrder` is the user-facing summary (kind and leading
exponent) and is all that convergence of a positive tail integral depends on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import expr as E

_REL = 1e-12


class GrowthKind(str, Enum):
    POLYNOMIAL = "polynomial"
    EXPONENTIAL = "exponential"
    GAUSSIAN = "gaussian-exponential"


@dataclass(frozen=True)
class AsymptoticOrder:
    """Comparison scale r^a, e^{a r} or e^{a r^2} of a profile at infinity.

    For a log-weight ``f`` the declared order describes the density
    ``e^f``, not ``f`` itself.
    """

    kind: GrowthKind
    exponent: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", GrowthKind(self.kind))
        if not math.isfinite(self.exponent):
            raise ValueError("asymptotic exponent must be finite")

    def tail_diverges(self) -> bool:
        """Whether the integral of a positive function of this order over [a, oo) diverges."""
        if self.kind is GrowthKind.POLYNOMIAL:
            return self.exponent >= -1.0
        return self.exponent >= 0.0

    def to_growth(self) -> "Growth":
        if self.kind is GrowthKind.POLYNOMIAL:
            return Growth(1.0, 0.0, 0.0, self.exponent)
        if self.kind is GrowthKind.EXPONENTIAL:
            return Growth(1.0, 0.0, self.exponent, 0.0)
        return Growth(1.0, self.exponent, 0.0, 0.0)


@dataclass(frozen=True)
class Growth:
    coef: float
    gauss: float
    expo: float
    power: float

    @property
    def key(self) -> tuple[float, float, float]:
        return (self.gauss, self.expo, self.power)

    def __mul__(self, o: "Growth") -> "Growth":
        return Growth(self.coef * o.coef, self.gauss + o.gauss, self.expo + o.expo, self.power + o.power)

    def __truediv__(self, o: "Growth") -> "Growth":
        return Growth(self.coef / o.coef, self.gauss - o.gauss, self.expo - o.expo, self.power - o.power)

    def pow(self, k: float) -> "Growth | None":
        if self.coef < 0 and not float(k).is_integer():
            return None
        return Growth(self.coef**k, k * self.gauss, k * self.expo, k * self.power)

    def order(self) -> AsymptoticOrder:
        if self.gauss != 0.0:
            return AsymptoticOrder(GrowthKind.GAUSSIAN, self.gauss)
        if self.expo != 0.0:
            return AsymptoticOrder(GrowthKind.EXPONENTIAL, self.expo)
        return AsymptoticOrder(GrowthKind.POLYNOMIAL, self.power)

    def tends_to_infinity(self) -> bool:
        return self.key > (0.0, 0.0, 0.0)

    def decays(self) -> bool:
        return self.key < (0.0, 0.0, 0.0)


@dataclass(frozen=True)
class LogPoly:
    a2: float = 0.0
    a1: float = 0.0
    b: float = 0.0
    a0: float = 0.0
    exact: bool = False

    def __add__(self, o: "LogPoly") -> "LogPoly":
        return LogPoly(self.a2 + o.a2, self.a1 + o.a1, self.b + o.b, self.a0 + o.a0, self.exact and o.exact)

    def scale(self, c: float) -> "LogPoly":
        return LogPoly(c * self.a2, c * self.a1, c * self.b, c * self.a0, self.exact)

    def exp_growth(self) -> Growth:
        return Growth(math.exp(self.a0), self.a2, self.a1, self.b)

    def sign_at_infinity(self) -> int:
        for c in (self.a2, self.a1, self.b):
            if c != 0.0:
                return 1 if c > 0 else -1
        return 0


class _Zero:
    """Marker for an identically vanishing subtree."""


ZERO_GROWTH = _Zero()


def growth(node: E.Node) -> Growth | None:
    g = _growth(node)
    return None if isinstance(g, _Zero) else g


def _growth(node: E.Node):
    if isinstance(node, E.Num):
        return ZERO_GROWTH if node.value == 0.0 else Growth(node.value, 0.0, 0.0, 0.0)
    if isinstance(node, E.Var):
        return Growth(1.0, 0.0, 0.0, 1.0)
    if isinstance(node, E.Integral):
        return None
    if not E.has_var(node):
        c = E.const_value(node)
        return ZERO_GROWTH if c == 0.0 else Growth(c, 0.0, 0.0, 0.0)
    if isinstance(node, E.Func):
        return _func_growth(node)
    a, b = node.left, node.right
    if node.op in ("+", "-"):
        ga, gb = _growth(a), _growth(b)
        if ga is None or gb is None:
            return None
        if node.op == "-" and not isinstance(gb, _Zero):
            gb = Growth(-gb.coef, gb.gauss, gb.expo, gb.power)
        if isinstance(ga, _Zero):
            return gb
        if isinstance(gb, _Zero):
            return ga
        if ga.key > gb.key:
            return ga
        if gb.key > ga.key:
            return gb
        c = ga.coef + gb.coef
        if abs(c) <= _REL * max(abs(ga.coef), abs(gb.coef)):
            return None  # leading terms cancel; lower orders unknown
        return Growth(c, ga.gauss, ga.expo, ga.power)
    if node.op == "*":
        ga, gb = _growth(a), _growth(b)
        if isinstance(ga, _Zero) or isinstance(gb, _Zero):
            return ZERO_GROWTH
        if ga is None or gb is None:
            return None
        return ga * gb
    if node.op == "/":
        ga, gb = _growth(a), _growth(b)
        if isinstance(ga, _Zero):
            return ZERO_GROWTH
        if ga is None or gb is None or isinstance(gb, _Zero):
            return None
        return ga / gb
    # power
    if E.has_var(b):
        lp = expansion(E.mul(b, E.log_of(a)))
        return None if lp is None else lp.exp_growth()
    ga = _growth(a)
    if ga is None or isinstance(ga, _Zero):
        return ga
    return ga.pow(E.const_value(b))


def _func_growth(node: E.Func):
    name = node.name
    if name == "sqrt":
        ga = _growth(node.arg)
        if ga is None or isinstance(ga, _Zero):
            return ga
        return ga.pow(0.5)
    if name in ("exp", "sinh", "cosh"):
        lp = expansion(node.arg)
        if lp is None:
            return None
        if name == "exp":
            return lp.exp_growth()
        s = lp.sign_at_infinity()
        if s == 0:
            return None
        g = lp.scale(float(s)).exp_growth()
        coef = 0.5 if (name == "cosh" or s > 0) else -0.5
        return Growth(coef * g.coef, g.gauss, g.expo, g.power)
    if name in ("log", "logsinh", "logcosh"):
        lp = expansion(node)
        if lp is None:
            return None
        if lp.a2 != 0.0:
            return Growth(lp.a2, 0.0, 0.0, 2.0)
        if lp.a1 != 0.0:
            return Growth(lp.a1, 0.0, 0.0, 1.0)
        return None  # log r growth is not representable
    return None  # sin, cos oscillate


def expansion(node: E.Node) -> LogPoly | None:
    if isinstance(node, E.Num):
        return LogPoly(a0=node.value, exact=True)
    if isinstance(node, E.Var):
        return LogPoly(a1=1.0, exact=True)
    if isinstance(node, E.Integral):
        return None
    if not E.has_var(node):
        return LogPoly(a0=E.const_value(node), exact=True)
    poly = E.as_polynomial(node, 2)
    if poly is not None:
        c = list(poly) + [0.0] * (3 - len(poly))
        return LogPoly(a2=c[2], a1=c[1], a0=c[0], exact=True)
    if isinstance(node, E.Bin):
        a, b = node.left, node.right
        if node.op in ("+", "-"):
            la, lb = expansion(a), expansion(b)
            if la is not None and lb is not None:
                return la + (lb if node.op == "+" else lb.scale(-1.0))
        elif node.op in ("*", "/"):
            if not E.has_var(a) and node.op == "*":
                lb = expansion(b)
                if lb is not None:
                    return lb.scale(E.const_value(a))
            if not E.has_var(b):
                la = expansion(a)
                if la is not None:
                    c = E.const_value(b)
                    return la.scale(c if node.op == "*" else 1.0 / c)
    if isinstance(node, E.Func):
        if node.name == "log":
            g = growth(node.arg)
            if g is not None and g.coef > 0:
                return LogPoly(g.gauss, g.expo, g.power, math.log(g.coef))
            return None
        if node.name == "logsinh":
            lp = expansion(node.arg)
            if lp is not None and lp.sign_at_infinity() > 0:
                return lp + LogPoly(a0=-math.log(2.0))
            return None
        if node.name == "logcosh":
            lp = expansion(node.arg)
            if lp is not None and lp.sign_at_infinity() != 0:
                return lp.scale(float(lp.sign_at_infinity())) + LogPoly(a0=-math.log(2.0))
            return None
    # last resort: a subtree tending to a finite limit is that limit + o(1)
    g = _growth(node)
    if isinstance(g, _Zero):
        return LogPoly(exact=True)
    if g is None:
        return None
    if g.decays():
        return LogPoly()
    if g.key == (0.0, 0.0, 0.0):
        return LogPoly(a0=g.coef)
    return None
