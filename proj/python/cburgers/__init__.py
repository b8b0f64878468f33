"""Exact series, spectral solver and certified checks for the complex
Burgers / KdV-Burgers equations on the torus."""

from ._core import (  # noqa: F401
    __version__,
    burgers_table,
    burgers_structural_check,
    kdvb_table,
    evaluate_mode,
    evaluate_field,
    partition_count,
    hardy_ramanujan_report,
    t_ladder,
    t0_bound,
    make_certificate,
    verify_sign_pattern,
    nonlinear_term,
    sobolev_norm,
    simulate,
    check_geometric_bound,
)

__all__ = [
    "__version__",
    "burgers_table",
    "burgers_structural_check",
    "kdvb_table",
    "evaluate_mode",
    "evaluate_field",
    "partition_count",
    "hardy_ramanujan_report",
    "t_ladder",
    "t0_bound",
    "make_certificate",
    "verify_sign_pattern",
    "nonlinear_term",
    "sobolev_norm",
    "simulate",
    "check_geometric_bound",
]
