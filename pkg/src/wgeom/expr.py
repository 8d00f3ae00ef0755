"""Expression trees over the radial variable ``r``.

Grammar::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := ('-'|'+') factor | base ('^' factor)?
    base   := number | 'r' | 'pi' | func '(' expr ')' | '(' expr ')'
    func   := sin | cos | sinh | cosh | exp | log | sqrt

Besides parsing and evaluation this module carries the small amount of
symbolic machinery the geometry needs: exact derivatives, antiderivatives of
common bound functions, and an overflow-safe rewrite of ``log(expr)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import ParseError, UnknownIdentifierError
from .jet import Jet, apply_func

FUNCTIONS = ("sin", "cos", "sinh", "cosh", "exp", "log", "sqrt")
# not reachable from the grammar; produced by log_of / antiderivative
INTERNAL_FUNCTIONS = ("logsinh", "logcosh")


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Bin:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Func:
    name: str
    arg: "Node"


@dataclass(frozen=True)
class Integral:
    """``int_lower^r integrand(s) ds`` evaluated by adaptive quadrature."""

    integrand: "Node"
    lower: float


Node = Union[Num, Var, Bin, Func, Integral]

R = Var()
ZERO = Num(0.0)
ONE = Num(1.0)


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<id>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            col = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col]!r}", col, text)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, val, pos = self.take()
        if val != value:
            what = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {value!r}, found {what}", pos, self.text)

    def parse(self) -> Node:
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos, self.text)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = Bin(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            node = Bin(op, node, self.factor())
        return node

    def factor(self) -> Node:
        kind, val, _ = self.peek()
        if kind == "op" and val in ("-", "+"):
            self.take()
            inner = self.factor()
            return inner if val == "+" else Bin("*", Num(-1.0), inner)
        node = self.base()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            node = Bin("^", node, self.factor())
        return node

    def base(self) -> Node:
        kind, val, pos = self.take()
        if kind == "num":
            return Num(float(val))
        if kind == "id":
            if val == "r":
                return R
            if val == "pi":
                return Num(math.pi)
            if val in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Func(val, arg)
            raise UnknownIdentifierError(f"unknown identifier {val!r}", pos, self.text)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", pos, self.text)


def parse(text: str) -> Node:
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# printing

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 3}


def _fmt_num(x: float) -> str:
    if x == math.pi:
        return "pi"
    s = repr(float(x))
    if s.endswith(".0"):
        s = s[:-2]
    return s


def to_text(node: Node) -> str:
    """Render ``node`` back into the grammar (internal nodes are expanded)."""
    return _to_text(node, 0)


def _to_text(node: Node, parent: int) -> str:
    if isinstance(node, Num):
        s = _fmt_num(node.value)
        return f"({s})" if node.value < 0 else s
    if isinstance(node, Var):
        return "r"
    if isinstance(node, Func):
        inner = _to_text(node.arg, 0)
        if node.name == "logsinh":
            return f"log(sinh({inner}))"
        if node.name == "logcosh":
            return f"log(cosh({inner}))"
        return f"{node.name}({inner})"
    if isinstance(node, Integral):
        raise ValueError("numeric integral nodes have no textual form")
    p = _PREC[node.op]
    if node.op == "^":
        # right associative: left operand needs parens at equal precedence
        s = f"{_to_text(node.left, p + 1)}^{_to_text(node.right, p)}"
    else:
        right_prec = p + 1 if node.op in ("-", "/") else p
        s = f"{_to_text(node.left, p)} {node.op} {_to_text(node.right, right_prec)}"
    return f"({s})" if p < parent else s


# --------------------------------------------------------------------------
# structural helpers

def has_var(node: Node) -> bool:
    if isinstance(node, Var):
        return True
    if isinstance(node, Num):
        return False
    if isinstance(node, Bin):
        return has_var(node.left) or has_var(node.right)
    if isinstance(node, Func):
        return has_var(node.arg)
    return True


def const_value(node: Node) -> float:
    """Value of an r-free subtree."""
    j = evaluate(node, np.zeros(1))
    return float(j.v[0])


def add(a: Node, b: Node) -> Node:
    if a == ZERO:
        return b
    if b == ZERO:
        return a
    if isinstance(a, Num) and isinstance(b, Num):
        return Num(a.value + b.value)
    return Bin("+", a, b)


def sub(a: Node, b: Node) -> Node:
    if b == ZERO:
        return a
    if isinstance(a, Num) and isinstance(b, Num):
        return Num(a.value - b.value)
    if a == ZERO:
        return mul(Num(-1.0), b)
    return Bin("-", a, b)


def mul(a: Node, b: Node) -> Node:
    if a == ZERO or b == ZERO:
        return ZERO
    if a == ONE:
        return b
    if b == ONE:
        return a
    if isinstance(a, Num) and isinstance(b, Num):
        return Num(a.value * b.value)
    return Bin("*", a, b)


def div(a: Node, b: Node) -> Node:
    if a == ZERO:
        return ZERO
    if b == ONE:
        return a
    if isinstance(a, Num) and isinstance(b, Num):
        return Num(a.value / b.value)
    return Bin("/", a, b)


def power(a: Node, b: Node) -> Node:
    if b == ONE:
        return a
    if b == ZERO:
        return ONE
    return Bin("^", a, b)


def func(name: str, a: Node) -> Node:
    return Func(name, a)


# --------------------------------------------------------------------------
# evaluation

def evaluate(node: Node, r: np.ndarray) -> Jet:
    r = np.asarray(r, dtype=float)
    with np.errstate(all="ignore"):
        return _eval(node, r)


def _eval(node: Node, r: np.ndarray) -> Jet:
    if isinstance(node, Num):
        return Jet.constant(node.value, r)
    if isinstance(node, Var):
        return Jet.variable(r)
    if isinstance(node, Func):
        return apply_func(node.name, _eval(node.arg, r))
    if isinstance(node, Integral):
        return _eval_integral(node, r)
    a = _eval(node.left, r)
    if node.op == "^":
        if not has_var(node.right):
            return a.powc(const_value(node.right))
        b = _eval(node.right, r)
        return apply_func("exp", b * apply_func("log", a))
    b = _eval(node.right, r)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    return a / b


def _eval_integral(node: Integral, r: np.ndarray) -> Jet:
    from .quadrature import cumulative_integral

    flat = r.ravel()
    inner = _eval(node.integrand, flat)

    def g(s: np.ndarray) -> np.ndarray:
        return evaluate(node.integrand, s).v

    vals = cumulative_integral(g, node.lower, flat)
    return Jet(vals.reshape(r.shape), inner.v.reshape(r.shape), inner.d1.reshape(r.shape))


# --------------------------------------------------------------------------
# symbolic derivative

def derivative(node: Node) -> Node:
    if isinstance(node, Num):
        return ZERO
    if isinstance(node, Var):
        return ONE
    if isinstance(node, Integral):
        return node.integrand
    if isinstance(node, Func):
        u, du = node.arg, derivative(node.arg)
        outer = {
            "sin": lambda: func("cos", u),
            "cos": lambda: mul(Num(-1.0), func("sin", u)),
            "sinh": lambda: func("cosh", u),
            "cosh": lambda: func("sinh", u),
            "exp": lambda: node,
            "log": lambda: div(ONE, u),
            "sqrt": lambda: div(Num(0.5), node),
            "logsinh": lambda: div(func("cosh", u), func("sinh", u)),
            "logcosh": lambda: div(func("sinh", u), func("cosh", u)),
        }[node.name]()
        return mul(outer, du)
    a, b = node.left, node.right
    if node.op == "+":
        return add(derivative(a), derivative(b))
    if node.op == "-":
        return sub(derivative(a), derivative(b))
    if node.op == "*":
        return add(mul(derivative(a), b), mul(a, derivative(b)))
    if node.op == "/":
        return div(sub(mul(derivative(a), b), mul(a, derivative(b))), power(b, Num(2.0)))
    if not has_var(b):
        k = const_value(b)
        return mul(mul(Num(k), power(a, Num(k - 1.0))), derivative(a))
    # a^b = exp(b log a)
    return mul(node, derivative(mul(b, func("log", a))))


# --------------------------------------------------------------------------
# polynomials

def as_polynomial(node: Node, max_degree: int = 8) -> np.ndarray | None:
    """Coefficients (ascending powers) if ``node`` is a polynomial in r."""
    if isinstance(node, Num):
        return np.array([node.value])
    if isinstance(node, Var):
        return np.array([0.0, 1.0])
    if isinstance(node, Integral):
        return None
    if isinstance(node, Func):
        if not has_var(node):
            return np.array([const_value(node)])
        return None
    if node.op == "^":
        if has_var(node.right):
            return None
        base = as_polynomial(node.left, max_degree)
        if base is None:
            return None
        k = const_value(node.right)
        if len(base) == 1:
            return np.array([base[0] ** k])
        if not float(k).is_integer() or k < 0 or (len(base) - 1) * k > max_degree:
            return None
        out = np.array([1.0])
        for _ in range(int(k)):
            out = np.polynomial.polynomial.polymul(out, base)
        return out
    a = as_polynomial(node.left, max_degree)
    b = as_polynomial(node.right, max_degree)
    if a is None or b is None:
        return None
    P = np.polynomial.polynomial
    if node.op == "+":
        return P.polyadd(a, b)
    if node.op == "-":
        return P.polysub(a, b)
    if node.op == "*":
        out = P.polymul(a, b)
        return out if len(out) - 1 <= max_degree else None
    if len(b) == 1 and b[0] != 0.0:
        return a / b[0]
    return None


def from_polynomial(coeffs: np.ndarray) -> Node:
    out: Node = ZERO
    for k, c in enumerate(coeffs):
        if c == 0.0:
            continue
        term = Num(float(c)) if k == 0 else mul(Num(float(c)), power(R, Num(float(k))))
        out = add(out, term)
    return out


# --------------------------------------------------------------------------
# antiderivatives

def _linear(node: Node) -> tuple[float, float] | None:
    p = as_polynomial(node, 1)
    if p is None or len(p) > 2:
        return None
    if len(p) == 1 or p[1] == 0.0:
        return None
    return float(p[1]), float(p[0])


def antiderivative(node: Node) -> Node | None:
    """A closed-form primitive of ``node`` for the shapes bound functions take.

    Returns ``None`` when no rule applies; callers then fall back to a
    numeric :class:`Integral` node.
    """
    if not has_var(node):
        return mul(Num(const_value(node)), R)
    poly = as_polynomial(node)
    if poly is not None:
        return from_polynomial(np.polynomial.polynomial.polyint(poly))
    if isinstance(node, Bin):
        a, b = node.left, node.right
        if node.op in ("+", "-"):
            fa, fb = antiderivative(a), antiderivative(b)
            if fa is None or fb is None:
                return None
            return add(fa, fb) if node.op == "+" else sub(fa, fb)
        if node.op == "*":
            if not has_var(a):
                fb = antiderivative(b)
                return None if fb is None else mul(Num(const_value(a)), fb)
            if not has_var(b):
                fa = antiderivative(a)
                return None if fa is None else mul(Num(const_value(b)), fa)
            return None
        if node.op == "/":
            if not has_var(b):
                fa = antiderivative(a)
                return None if fa is None else div(fa, Num(const_value(b)))
            if isinstance(a, Bin) and a.op == "*" and not has_var(a.left):
                # (c * u) / v -> c * (u / v)
                inner = antiderivative(div(a.right, b))
                return None if inner is None else mul(Num(const_value(a.left)), inner)
            if not has_var(a):
                c = const_value(a)
                if isinstance(b, Var):
                    return mul(Num(c), func("log", R))
                if isinstance(b, Bin) and b.op == "^" and isinstance(b.left, Var) and not has_var(b.right):
                    k = -const_value(b.right)
                    if k == -1.0:
                        return mul(Num(c), func("log", R))
                    return mul(Num(c / (k + 1.0)), power(R, Num(k + 1.0)))
            if isinstance(a, Func) and isinstance(b, Func) and a.arg == b.arg:
                lin = _linear(a.arg)
                if lin is not None:
                    alpha = lin[0]
                    if (a.name, b.name) == ("cosh", "sinh"):
                        return div(func("logsinh", a.arg), Num(alpha))
                    if (a.name, b.name) == ("sinh", "cosh"):
                        return div(func("logcosh", a.arg), Num(alpha))
            return None
        if node.op == "^" and isinstance(a, Var) and not has_var(b):
            k = const_value(b)
            if k == -1.0:
                return func("log", R)
            return div(power(R, Num(k + 1.0)), Num(k + 1.0))
        return None
    if isinstance(node, Func):
        lin = _linear(node.arg)
        if lin is None:
            return None
        alpha = lin[0]
        u = node.arg
        rule = {
            "exp": lambda: func("exp", u),
            "sin": lambda: mul(Num(-1.0), func("cos", u)),
            "cos": lambda: func("sin", u),
            "sinh": lambda: func("cosh", u),
            "cosh": lambda: func("sinh", u),
        }.get(node.name)
        if rule is None:
            return None
        return div(rule(), Num(alpha))
    if isinstance(node, Integral):
        return None
    return None


def definite_integral(node: Node, lower: float) -> Node:
    """``r -> int_lower^r node``: exact when a primitive is known, else numeric."""
    prim = antiderivative(node)
    if prim is not None:
        with np.errstate(all="ignore"):
            c = evaluate(prim, np.array([lower])).v[0]
        if np.isfinite(c):
            return sub(prim, Num(float(c))) if c != 0.0 else prim
    return Integral(node, float(lower))


# --------------------------------------------------------------------------
# overflow-safe logarithm

def log_of(node: Node) -> Node:
    """An expression equal to ``log(node)`` for positive ``node``.

    Products, quotients, powers and exponentials are split so the result
    stays finite where ``node`` itself would overflow or underflow.
    """
    if isinstance(node, Num):
        return Num(math.log(node.value)) if node.value > 0 else func("log", node)
    if isinstance(node, Var):
        return func("log", R)
    if isinstance(node, Func):
        if node.name == "exp":
            return node.arg
        if node.name == "sinh":
            return func("logsinh", node.arg)
        if node.name == "cosh":
            return func("logcosh", node.arg)
        if node.name == "sqrt":
            return mul(Num(0.5), log_of(node.arg))
        return func("log", node)
    if isinstance(node, Bin):
        a, b = node.left, node.right
        if node.op == "*":
            if isinstance(a, Num) and a.value < 0:
                return func("log", node)
            return add(log_of(a), log_of(b))
        if node.op == "/":
            return sub(log_of(a), log_of(b))
        if node.op == "^":
            if not has_var(b):
                k = const_value(b)
                if float(k).is_integer() and int(k) % 2 == 0:
                    return func("log", node)
                return mul(Num(k), log_of(a))
            return mul(b, log_of(a))
    return func("log", node)
