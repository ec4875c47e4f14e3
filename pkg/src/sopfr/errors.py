"""Exception types and default resource budgets."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation (e.g. n = 0)."""


class ResourceError(RuntimeError):
    """Request exceeds a configured memory or time budget."""


# Largest x for which the full-range sieve paths (direct sweep, prime
# enumeration, prime-contribution sums) are allowed.
DIRECT_BUDGET = 10**9
PRIME_CONTRIB_BUDGET = 10**9
SUBLINEAR_BUDGET = 10**11

# Entries in a single SpfTable (int64 each).
SPF_TABLE_BUDGET = 1 << 25

# Isolated trial-division queries need at most ~sqrt(n)/3 divisions.
TRIAL_DIVISION_BOUND = 10**14
