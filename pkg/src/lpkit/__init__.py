"""Exact computations with parameter arrays of Leonard systems."""

from .exactfield import FiniteField, QuadraticExtension, Rationals, Scalar, solve_unit_quadratic
from .parray import ParameterArray, classify_type, complete_from_seed, fundamental_beta, validate

__all__ = [
    "FiniteField",
    "QuadraticExtension",
    "Rationals",
    "Scalar",
    "solve_unit_quadratic",
    "ParameterArray",
    "classify_type",
    "complete_from_seed",
    "fundamental_beta",
    "validate",
]

__version__ = "0.1.0"
