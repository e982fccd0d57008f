"""Exact Apostol-Bernoulli functions, related polynomial families and Lerch values."""

__version__ = "0.1.0"

from .errors import (
    BudgetError,
    ConsistencyError,
    DomainError,
    IterationLimitError,
    PoleError,
    PrecisionError,
)
from .exact import BetaPolynomial, GaussianRational, Polynomial, RationalFunction, format_rational, parse_rational
from .combinatorics import (
    bernoulli_number,
    bernoulli_polynomial,
    binomial,
    eulerian_number,
    mirimanoff_polynomial,
    stirling2,
)
from .polyfamilies import (
    DerivativeKind,
    derivative_poly,
    derivative_poly_closed,
    eulerian_poly,
    geometric_poly,
)
from .apostol import (
    BIVARIATE_ROUTES,
    LAMBDA_ROUTES,
    F_negative,
    beta_bivariate,
    beta_lambda,
    lerch_negative,
)
from .numerics import (
    adaptive_quad,
    beta_integral_rep,
    bernoulli_limit_check,
    hermite_phi,
    lerch_series,
    power_sum_series,
    series_transform,
)
from .report import CheckResult
