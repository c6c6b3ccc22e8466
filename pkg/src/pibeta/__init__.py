"""pibeta: exact rational brackets of pi, with verification.

Builds the family of certified intervals lower < pi < upper obtained by
integrating 4 / (x^2 + 1) perturbed by c_q x^(4q) (1-x)^(4q) over [0, 1],
with every step in exact rational arithmetic, and audits the bundled
published reference tables against the recomputation.
"""

from .bounds import (
    ApproximationRecord,
    HypergeomCertificate,
    bracket_pi,
    bracket_width,
    hypergeometric_bracket,
    pi_approximant,
)
from .errors import (
    DomainError,
    InternalConsistencyError,
    PiBetaError,
    PrecisionError,
)
from .exact import GaussianRational, Rational, factorial, make_rational, rat_cmp, rat_pow
from .oracle import PiApproximation, arctan_recip_scaled, pi_scaled
from .polynomial import (
    DivisionResult,
    Polynomial,
    dalzell_polynomial,
    divide_by_x2_plus_1,
    integrate_unit_interval,
)
from .render import DecimalRendering, emit_table, to_decimal
from .special_values import BetaValue, beta_int, central_beta, divisibility_coefficient
from .verify import VerificationReport, load_reference_tables, verify_report

__version__ = "0.1.0"

__all__ = [
    "ApproximationRecord",
    "BetaValue",
    "DecimalRendering",
    "DivisionResult",
    "DomainError",
    "GaussianRational",
    "HypergeomCertificate",
    "InternalConsistencyError",
    "PiApproximation",
    "PiBetaError",
    "Polynomial",
    "PrecisionError",
    "Rational",
    "VerificationReport",
    "arctan_recip_scaled",
    "beta_int",
    "bracket_pi",
    "bracket_width",
    "central_beta",
    "dalzell_polynomial",
    "divide_by_x2_plus_1",
    "divisibility_coefficient",
    "emit_table",
    "factorial",
    "hypergeometric_bracket",
    "integrate_unit_interval",
    "load_reference_tables",
    "make_rational",
    "pi_approximant",
    "pi_scaled",
    "rat_cmp",
    "rat_pow",
    "to_decimal",
    "verify_report",
]
