"""Extended (p,q) beta, gamma and confluent hypergeometric functions, with inequality checks."""

from .errors import DomainError, IntegrandError, PQSpecialError, PreconditionError, RangeError
from .extended import (
    ExtensionParams,
    SeriesConfig,
    SeriesResult,
    extended_beta,
    extended_beta_single,
    gamma_p,
    phi,
    phi_derivative,
    phi_integral,
    phi_reflect,
    phi_series,
)
from .inequalities import CHECKERS, InequalityVerdict
from .quadrature import QuadratureConfig, QuadratureResult
from .special import beta, gamma, log_beta, log_gamma, pochhammer
from .suite import GridSpec, SuiteReport, run_suite

__version__ = "0.1.0"
