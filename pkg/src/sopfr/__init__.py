"""Exact sums of prime factors (sopfr, sopf) and their summatory functions."""

__version__ = "0.1.0"

from .errors import DomainError, ResourceError
from .factor_core import Factorization, SpfTable, build_spf_table, factorize, sopf, sopfr
from .sieve_engine import Method, SummationResult, primes_up_to, sweep_sum
from .prime_sums import (
    QuotientTable,
    mertens_sum,
    prime_count,
    prime_sum_direct,
    prime_sum_table,
)
from .aggregates import (
    CrossCheckReport,
    b_direct,
    b_prime_contrib,
    b_sublinear,
    bdist_direct,
    bdist_prime_contrib,
    bdist_sublinear,
    cross_check,
    summatory,
)
from .asymptotics import (
    RatioReport,
    basel_log_sum,
    corollary_ratio,
    model_B,
    model_P,
    ratio_table,
)
