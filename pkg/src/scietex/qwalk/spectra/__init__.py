"""
Spectra Subpackage.

This subpackage builds finite truncations of the evolution operator, computes their complete
eigendecomposition and classifies the eigenvalues against the analytic band structure.

Classes:
    TruncatedOperator: Dense truncation of U on a window.
    Eigenpair: Eigenvalue, phase, unit eigenvector and residual.
    SpectrumLabel: Classification labels.
    ClassifyTolerances: Classification tolerances.
    SpectrumReport: Labeled eigenpairs.
    DoublingCheck: Result of the window-doubling comparison.

Modules:
    operator: Truncated operators.
    eigensolve: Dense eigensolver.
    classify: Classification and spectral diagnostics.
"""

from .operator import TruncatedOperator, build_matrix
from .eigensolve import MAX_DIMENSION, RESIDUAL_TOL, Eigenpair, eigendecompose
from .classify import (
    BAND_EDGE_PERIODIC,
    BAND_EDGE_TRUNCATE,
    SpectrumLabel,
    ClassifyTolerances,
    SpectrumReport,
    DoublingCheck,
    localization_measure,
    classify,
    band_hausdorff_distance,
    doubling_stable,
    spectrum_of,
)

__all__ = [
    "TruncatedOperator",
    "build_matrix",
    "MAX_DIMENSION",
    "RESIDUAL_TOL",
    "Eigenpair",
    "eigendecompose",
    "BAND_EDGE_PERIODIC",
    "BAND_EDGE_TRUNCATE",
    "SpectrumLabel",
    "ClassifyTolerances",
    "SpectrumReport",
    "DoublingCheck",
    "localization_measure",
    "classify",
    "band_hausdorff_distance",
    "doubling_stable",
    "spectrum_of",
]
