"""Second-order forward-mode automatic differentiation on numpy arrays.

A :class:`Jet` carries the value and the first two derivatives of a scalar
function of ``r`` at every point of an array, so a whole quadrature panel is
differentiated in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Jet:
    v: np.ndarray
    d1: np.ndarray
    d2: np.ndarray

    @classmethod
    def constant(cls, c: float, like: np.ndarray) -> "Jet":
        z = np.zeros_like(like, dtype=float)
        return cls(z + c, z, z.copy())

    @classmethod
    def variable(cls, r: np.ndarray) -> "Jet":
        r = np.asarray(r, dtype=float)
        return cls(r, np.ones_like(r), np.zeros_like(r))

    def __add__(self, o: "Jet") -> "Jet":
        return Jet(self.v + o.v, self.d1 + o.d1, self.d2 + o.d2)

    def __sub__(self, o: "Jet") -> "Jet":
        return Jet(self.v - o.v, self.d1 - o.d1, self.d2 - o.d2)

    def __neg__(self) -> "Jet":
        return Jet(-self.v, -self.d1, -self.d2)

    def __mul__(self, o: "Jet") -> "Jet":
        return Jet(
            self.v * o.v,
            self.d1 * o.v + self.v * o.d1,
            self.d2 * o.v + 2.0 * self.d1 * o.d1 + self.v * o.d2,
        )

    def __truediv__(self, o: "Jet") -> "Jet":
        q = self.v / o.v
        q1 = (self.d1 - q * o.d1) / o.v
        q2 = (self.d2 - 2.0 * q1 * o.d1 - q * o.d2) / o.v
        return Jet(q, q1, q2)

    def scale(self, c: float) -> "Jet":
        return Jet(c * self.v, c * self.d1, c * self.d2)

    def chain(self, g0: np.ndarray, g1: np.ndarray, g2: np.ndarray) -> "Jet":
        """Compose an outer function with value/derivatives g0, g1, g2 at self.v."""
        return Jet(g0, g1 * self.d1, g2 * self.d1 * self.d1 + g1 * self.d2)

    def powc(self, k: float) -> "Jet":
        u = self.v
        if k == 0.0:
            return Jet.constant(1.0, u)
        if k == 1.0:
            return self
        if k == 2.0:
            return self * self
        return self.chain(u**k, k * u ** (k - 1.0), k * (k - 1.0) * u ** (k - 2.0))


def _logsinh(x: np.ndarray) -> np.ndarray:
    ax = np.where(x > 0, x, np.nan)
    small = np.log(np.sinh(np.minimum(ax, 1.0)))
    big = ax + np.log1p(-np.exp(-2.0 * ax)) - np.log(2.0)
    return np.where(ax < 1.0, small, big)


def _logcosh(x: np.ndarray) -> np.ndarray:
    ax = np.abs(x)
    return ax + np.log1p(np.exp(-2.0 * ax)) - np.log(2.0)


def _coth(x: np.ndarray) -> np.ndarray:
    return 1.0 / np.tanh(x)


def _csch2(x: np.ndarray) -> np.ndarray:
    s = 1.0 / np.sinh(np.minimum(np.abs(x), 700.0))
    return s * s


def apply_func(name: str, u: Jet) -> Jet:
    x = u.v
    if name == "sin":
        s, c = np.sin(x), np.cos(x)
        return u.chain(s, c, -s)
    if name == "cos":
        s, c = np.sin(x), np.cos(x)
        return u.chain(c, -s, -c)
    if name == "sinh":
        s, c = np.sinh(x), np.cosh(x)
        return u.chain(s, c, s)
    if name == "cosh":
        s, c = np.sinh(x), np.cosh(x)
        return u.chain(c, s, c)
    if name == "exp":
        e = np.exp(x)
        return u.chain(e, e, e)
    if name == "log":
        inv = 1.0 / x
        return u.chain(np.log(x), inv, -inv * inv)
    if name == "sqrt":
        s = np.sqrt(x)
        return u.chain(s, 0.5 / s, -0.25 / (s * x))
    if name == "logsinh":
        return u.chain(_logsinh(x), _coth(x), -_csch2(x))
    if name == "logcosh":
        t = np.tanh(x)
        return u.chain(_logcosh(x), t, 1.0 - t * t)
    raise KeyError(name)
