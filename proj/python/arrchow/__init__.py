"""Exact invariants of reflection arrangements and their Chow polynomials."""

from ._core import (
    Arrangement,
    Error,
    chow_dns,
    chow_type_a,
    chow_type_b,
    gamma_increment,
    gamma_vector,
    h_b_closed,
    h_d_closed,
    run_cli,
    verify,
)

__all__ = [
    "Arrangement",
    "Error",
    "chow_dns",
    "chow_type_a",
    "chow_type_b",
    "gamma_increment",
    "gamma_vector",
    "h_b_closed",
    "h_d_closed",
    "run_cli",
    "verify",
]
