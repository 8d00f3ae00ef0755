"""Weighted model-space geometry: volumes, capacities, parabolicity and comparison checks."""

from __future__ import annotations

__version__ = "0.1.0"

from .asymptotics import AsymptoticOrder, GrowthKind
from .capacity import (
    Parabolicity,
    ParabolicityVerdict,
    annulus_capacities,
    capacity_area_ratio,
    capacity_at_infinity,
    classify_parabolicity,
    exit_time_transplant,
    generalized_potential,
    potential,
)
from .comparison import IntrinsicScenario, Theorem, verify_intrinsic
from .errors import (
    IntegrandSignError,
    InvalidWarpingError,
    ParseError,
    ProfileDomainError,
    QuadratureError,
    ScenarioError,
    UnknownIdentifierError,
    WGeomError,
)
from .extrinsic import (
    Direction,
    SubmanifoldProfile,
    SubModel,
    check_balance,
    classify_submanifold,
    extrinsic_laplacian_bound,
    totally_geodesic_submodel,
    verify_simpson,
)
from .model import WeightedModelSpace
from .profile import (
    RadialProfile,
    WarpingFunction,
    exponential_warping,
    make_warping,
    parse_profile,
    polynomial_weight,
    space_form_warping,
)
from .quadrature import classify_improper, integrate

__all__ = [
    "AsymptoticOrder", "GrowthKind",
    "Parabolicity", "ParabolicityVerdict", "annulus_capacities", "capacity_area_ratio",
    "capacity_at_infinity", "classify_parabolicity", "exit_time_transplant", "generalized_potential", "potential",
    "IntrinsicScenario", "Theorem", "verify_intrinsic",
    "IntegrandSignError", "InvalidWarpingError", "ParseError", "ProfileDomainError", "QuadratureError",
    "ScenarioError", "UnknownIdentifierError", "WGeomError",
    "Direction", "SubmanifoldProfile", "SubModel", "check_balance", "classify_submanifold",
    "extrinsic_laplacian_bound", "totally_geodesic_submodel", "verify_simpson",
    "WeightedModelSpace",
    "RadialProfile", "WarpingFunction", "exponential_warping", "make_warping", "parse_profile",
    "polynomial_weight", "space_form_warping",
    "classify_improper", "integrate",
]
