"""Finite biorthogonal M matrix polynomials with commuting matrix parameters."""

from ._core import (
    DomainError,
    NumericalError,
    ParamSet,
    ValidationError,
    beta_matrix,
    biorth_closed,
    biorth_numeric,
    delta_params,
    eval,
    gamma_matrix,
    gamma_matrix_inv,
    hypergeometric_pfq,
    identities,
    jacobi_first,
    m_first,
    m_first_hypergeometric,
    m_second,
    pochhammer,
    run_suite,
    weight_eval,
    weight_integral,
)

__all__ = [
    "DomainError",
    "NumericalError",
    "ParamSet",
    "ValidationError",
    "beta_matrix",
    "biorth_closed",
    "biorth_numeric",
    "delta_params",
    "eval",
    "gamma_matrix",
    "gamma_matrix_inv",
    "hypergeometric_pfq",
    "identities",
    "jacobi_first",
    "m_first",
    "m_first_hypergeometric",
    "m_second",
    "pochhammer",
    "run_suite",
    "weight_eval",
    "weight_integral",
]
