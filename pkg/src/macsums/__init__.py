"""macsums: exact q-series arithmetic for MacMahon-type generalized divisor
sums, with an identity catalog and a congruence scanner."""

from .series import ModSeries, Series, euler_function, geometric_pow, q_derivative
from .qcombo import IntPoly, q_binomial, q_factorial, q_int, stirling1_unsigned
from .divisors import eisenstein, lambert_series, sigma, sigma_series, theta_moment
from .macmahon import (
    coefficient_table,
    m_single_sum,
    mo_andrews_rose,
    strict_multisum,
    weak_multisum,
)

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "ModSeries",
    "Series",
    "coefficient_table",
    "eisenstein",
    "euler_function",
    "geometric_pow",
    "lambert_series",
    "m_single_sum",
    "mo_andrews_rose",
    "q_binomial",
    "q_derivative",
    "q_factorial",
    "q_int",
    "sigma",
    "sigma_series",
    "stirling1_unsigned",
    "strict_multisum",
    "theta_moment",
    "weak_multisum",
    "__version__",
]
