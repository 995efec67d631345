"""Exact and rigorously bounded numeric evaluation of multiple t-values.

t(a1,...,ak) is the nested sum over strictly increasing odd denominators
(2j-1) raised to the given exponents; t* is the non-strict variant.  The
package evaluates even-argument strings and their composition sums as
exact rational multiples of pi powers, cross-checks every evaluation
formula against an independent symmetric-function oracle, and evaluates
arbitrary convergent tuples numerically with rigorous error bounds.
"""

from .errors import (
    ConsistencyError,
    DivergenceError,
    DomainError,
    HomogeneityError,
    InsufficientTermsError,
    MtvError,
    UnsupportedExactError,
)
from .exact import PiValue, format_pi_value, parse_pi_value, pi_add
from .cyclo import CycloElem, RationalPoly, cyclo_pow, cyclo_real_rational, cyclotomic_polynomial
from .euler import EulerTable, euler_number, euler_numbers
from .symfun import PowerSumTable, power_sums, t_string_oracle, tstar_string_oracle
from .closed_forms import (
    SumValue,
    closed_sum,
    hurwitz_scaled,
    sum_even,
    sum_from_strings,
    sum_weight4,
    t2_string,
    t_string_even_arg,
    tstar2_string,
    tstar_string_even_arg,
)
from .series import BallReal, compositions, default_terms, sum_numeric, t_numeric
from .verify import VerifyReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BallReal",
    "ConsistencyError",
    "CycloElem",
    "DivergenceError",
    "DomainError",
    "EulerTable",
    "HomogeneityError",
    "InsufficientTermsError",
    "MtvError",
    "PiValue",
    "PowerSumTable",
    "RationalPoly",
    "SumValue",
    "UnsupportedExactError",
    "VerifyReport",
    "closed_sum",
    "compositions",
    "cyclo_pow",
    "cyclo_real_rational",
    "cyclotomic_polynomial",
    "default_terms",
    "euler_number",
    "euler_numbers",
    "format_pi_value",
    "hurwitz_scaled",
    "parse_pi_value",
    "pi_add",
    "power_sums",
    "run_suite",
    "sum_even",
    "sum_from_strings",
    "sum_numeric",
    "sum_weight4",
    "t2_string",
    "t_numeric",
    "t_string_even_arg",
    "t_string_oracle",
    "tstar2_string",
    "tstar_string_even_arg",
    "tstar_string_oracle",
    "__version__",
]
