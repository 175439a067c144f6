"""Exact star-product calculus for metric operators of non-hermitian
Hamiltonians, with a finite clock/shift Weyl algebra for cross-validation."""

from .errors import (BadDimension, DimensionMismatch, InvalidDocument,
                     IrrationalDiscriminant, MoyalError, NegativeXPower,
                     NonPolynomialHamiltonian, NonQuadraticExponent,
                     NonTerminatingStar, NonTerminatingTwist, NonzeroLeading,
                     NotUnitLeading, ParseError, UnsupportedKinetic,
                     ZeroParameter)
from .formatting import format_expression
from .parsing import parse_expression, parse_hbar_scalar
from .pde import (DifferentialOperator, SwansonParams, apply_operator,
                  derive_metric_operator, gaussian_metric_candidates,
                  residual, swanson_from_ladder)
from .rationals import GaussianRational, HbarScalar
from .series import MetricSeries, assemble, solve_kinetic_ode, solve_metric_series
from .starlog import PositivityReport, positivity_evidence, star_exp, star_log
from .symbols import (ExpQuadratic, G, HBAR, KERNEL_EXP, ONE, P, PhaseSymbol,
                      TRIVIAL_EXP, X, ZERO, dagger, is_hermitian, star)

__all__ = [
    "BadDimension", "DifferentialOperator", "DimensionMismatch", "ExpQuadratic",
    "G", "GaussianRational", "HBAR", "HbarScalar", "InvalidDocument",
    "IrrationalDiscriminant", "KERNEL_EXP", "MetricSeries", "MoyalError",
    "NegativeXPower", "NonPolynomialHamiltonian", "NonQuadraticExponent",
    "NonTerminatingStar", "NonTerminatingTwist", "NonzeroLeading",
    "NotUnitLeading", "ONE", "P", "ParseError", "PhaseSymbol",
    "PositivityReport", "SwansonParams", "TRIVIAL_EXP", "UnsupportedKinetic",
    "X", "ZERO", "ZeroParameter", "apply_operator", "assemble", "dagger",
    "derive_metric_operator", "format_expression", "gaussian_metric_candidates",
    "is_hermitian", "parse_expression", "parse_hbar_scalar",
    "positivity_evidence", "residual", "solve_kinetic_ode",
    "solve_metric_series", "star", "star_exp", "star_log",
    "swanson_from_ladder",
]

__version__ = "0.1.0"
