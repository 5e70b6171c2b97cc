"""Exact construction and verification of a difference-equation system for
Apery-type log-power series.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (  # noqa: F401
    __version__,
    binomial,
    power_sum,
    r_value,
    r_derivative,
    zero_order_check,
    tail_bound,
    f1_at_one,
    eval_f,
    log_branch,
    dump_matrix_s,
    dump_matrix_v,
    check_identities,
    verify_recurrence_exact,
    verify_recurrence_numeric,
)
