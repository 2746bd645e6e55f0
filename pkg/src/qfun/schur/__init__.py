"""Schur P-, Q- and skew Q-functions and the identities relating them."""

from .checks import (
    bijection_check,
    cauchy_truncated,
    gen_fn_pair_check,
    gen_fn_row_check,
    littlewood_coeff_check,
    littlewood_coeffs,
    littlewood_split,
    littlewood_truncated,
    nimmo_polynomiality,
    pair_convention_checks,
    schur3_check,
    stability_check,
)
from .generating import q_pair, q_pair_table, q_row, q_row_series, schur_def_Q, schur_S
from .nimmo import (
    QExpr,
    VariableMap,
    build_nimmo_matrices,
    chi,
    nimmo_P,
    nimmo_pfaffian,
    nimmo_Q,
    schur_A,
    schur_D,
)
from .partitions import StrictPartition, index_set, strict_partitions
from .skew import (
    M_matrix,
    N_matrix,
    ns_Q,
    pjn_check,
    skew_by_projection,
    skew_candidates,
    skew_expansion_check,
    skew_Q_pjn,
    skew_support_guard,
)

__all__ = [
    "M_matrix",
    "N_matrix",
    "QExpr",
    "StrictPartition",
    "VariableMap",
    "bijection_check",
    "build_nimmo_matrices",
    "cauchy_truncated",
    "chi",
    "gen_fn_pair_check",
    "gen_fn_row_check",
    "index_set",
    "littlewood_coeff_check",
    "littlewood_coeffs",
    "littlewood_split",
    "littlewood_truncated",
    "nimmo_P",
    "nimmo_Q",
    "nimmo_pfaffian",
    "nimmo_polynomiality",
    "ns_Q",
    "pjn_check",
    "pair_convention_checks",
    "q_pair",
    "q_pair_table",
    "q_row",
    "q_row_series",
    "schur3_check",
    "schur_A",
    "schur_D",
    "schur_S",
    "schur_def_Q",
    "skew_Q_pjn",
    "skew_by_projection",
    "skew_candidates",
    "skew_expansion_check",
    "skew_support_guard",
    "stability_check",
    "strict_partitions",
]
