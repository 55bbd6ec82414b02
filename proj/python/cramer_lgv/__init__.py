"""Exact Cramer's rule via vertex-disjoint path systems."""

from ._core import (
    DEFAULT_CAP,
    Error,
    certify,
    check_certificate,
    det_bareiss,
    det_leibniz,
    path_matrix,
    replace_column,
    run_cli,
    solve_cramer,
    solve_gauss,
    verify_lgv,
)

__all__ = [
    "DEFAULT_CAP",
    "Error",
    "certify",
    "check_certificate",
    "det_bareiss",
    "det_leibniz",
    "path_matrix",
    "replace_column",
    "run_cli",
    "solve_cramer",
    "solve_gauss",
    "verify_lgv",
]
