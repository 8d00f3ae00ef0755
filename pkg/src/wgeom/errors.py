"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class WGeomError(Exception):
    """Base class for all errors raised by wgeom."""


class ParseError(WGeomError):
    """Malformed profile expression. ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int, text: str = "") -> None:
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownIdentifierError(ParseError):
    pass


class ProfileDomainError(WGeomError):
    """Evaluation hit a pole or left the real domain of the expression."""


class InvalidWarpingError(WGeomError):
    pass


class QuadratureError(WGeomError):
    """Requested tolerance not reached within the panel budget."""


class IntegrandSignError(WGeomError):
    """A non-positive integrand sample was met where positivity is required."""


class ScenarioError(WGeomError):
    """A scenario lacks the fields a theorem or command needs."""
