"""Numerical workbench for two-parameter deformed oscillator algebras."""

from qdeform._core import (
    DeformParams,
    DomainError,
    bracket_k_form,
    casimir_profile,
    delta_bracket,
    dressing_solver_demo,
    f_obstruction_term,
    factorization_residual,
    gen_bracket,
    h_function,
    h_scan,
    hopf_scan,
    k_rescale_residual,
    matrix_window,
    mb_identity_residual,
    reduction_check,
    std_bracket,
    suq2_homomorphism_residual,
    verify_family,
)

__all__ = [
    "DeformParams",
    "DomainError",
    "bracket_k_form",
    "casimir_profile",
    "delta_bracket",
    "dressing_solver_demo",
    "f_obstruction_term",
    "factorization_residual",
    "gen_bracket",
    "h_function",
    "h_scan",
    "hopf_scan",
    "k_rescale_residual",
    "matrix_window",
    "mb_identity_residual",
    "reduction_check",
    "std_bracket",
    "suq2_homomorphism_residual",
    "verify_family",
]

__version__ = "0.1.0"
