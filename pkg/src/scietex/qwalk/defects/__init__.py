"""
Defects Subpackage.

This subpackage constructs the compactly supported eigenfunctions created by edge defects,
verifies candidate eigenpairs, searches for compactly supported kernels of ``U - lambda`` and
decides whether a walk has edge defects.

Classes:
    Sign: Sign of the defect eigenvalue.
    DefectEigenfunction: Superposition of translated two-site eigenvectors.
    DetectionMethod: Detection methods.
    DetectConfig: Detection settings.
    Evidence: Eigenvalue with eigenspace dimension and support.
    DetectionReport: Verdict and evidence.

Modules:
    eigenfunction: Defect eigenfunctions and eigenpair verification.
    kernel: Compactly supported kernels.
    detect: Edge-defect detection.
"""

from .eigenfunction import (
    Sign,
    DefectEigenfunction,
    translate,
    defect_eigenvalue,
    default_kappas,
    build_defect_eigenfunction,
    verify_eigenpair,
)
from .kernel import NULL_RCOND, kernel_parts, kernel_map, kernel_singular_ratio, compact_kernel
from .detect import (
    DetectionMethod,
    DetectConfig,
    Evidence,
    DetectionReport,
    detect_edge_defects,
)

__all__ = [
    "Sign",
    "DefectEigenfunction",
    "translate",
    "defect_eigenvalue",
    "default_kappas",
    "build_defect_eigenfunction",
    "verify_eigenpair",
    "NULL_RCOND",
    "kernel_parts",
    "kernel_map",
    "kernel_singular_ratio",
    "compact_kernel",
    "DetectionMethod",
    "DetectConfig",
    "Evidence",
    "DetectionReport",
    "detect_edge_defects",
]
