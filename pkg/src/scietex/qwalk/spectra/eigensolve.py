"""
Dense eigensolver module.

Periodic truncations are unitary, hence normal: their complex Schur form is diagonal and the
Schur vectors form an orthonormal eigenbasis, degenerate eigenspaces included. Hard truncations
are not normal and go through the general LAPACK eigensolver. Every returned pair is re-checked
by direct multiplication.

Classes:
    - Eigenpair: Eigenvalue, phase, unit eigenvector and residual.

Functions:
    - eigendecompose: Complete eigendecomposition of a truncated operator.
"""

import logging
from dataclasses import dataclass
from logging import Logger
from typing import Optional

import numpy as np
from numpy.typing import NDArray
from scipy import linalg

from ..base.errors import ConvergenceFailure, UnsupportedParameter
from ..base.phase import reduce_phase
from ..lattice.boundary import Boundary
from ..lattice.state import State
from ..lattice.window import Window
from .operator import TruncatedOperator

MAX_DIMENSION: int = 4096
RESIDUAL_TOL: float = 1e-8

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Eigenpair:
    """
    Eigenvalue with its eigenvector.

    Attributes:
        eigenvalue (complex): The eigenvalue lambda.
        phase (float): Argument of lambda in [0, 2pi).
        vector (NDArray[np.complex128]): Read-only unit eigenvector in (site, component) order.
        residual (float): ``||M v - lambda v||``.
    """

    eigenvalue: complex
    phase: float
    vector: NDArray[np.complex128]
    residual: float

    def __post_init__(self) -> None:
        vec = np.array(self.vector, dtype=np.complex128)
        vec.flags.writeable = False
        object.__setattr__(self, "vector", vec)

    @property
    def modulus(self) -> float:
        """Modulus |lambda|."""
        return abs(self.eigenvalue)

    def as_state(self, window: Window) -> State:
        """Eigenvector as a state on the operator window."""
        return State.from_vector(window, self.vector)


def _residuals(
    matrix: NDArray[np.complex128], values: NDArray[np.complex128], vectors: NDArray[np.complex128]
) -> NDArray[np.float64]:
    return np.linalg.norm(matrix @ vectors - vectors * values[None, :], axis=0)


def _general_eig(
    matrix: NDArray[np.complex128],
) -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
    values, vectors = linalg.eig(matrix)
    norms = np.linalg.norm(vectors, axis=0)
    return values, vectors / norms[None, :]


def eigendecompose(op: TruncatedOperator, logger: Optional[Logger] = None) -> list[Eigenpair]:
    """
    Complete eigendecomposition of a truncated operator.

    Args:
        op (TruncatedOperator): Operator of dimension at most 4096.
        logger (Optional[Logger], optional): Logger for solver diagnostics.

    Returns:
        list[Eigenpair]: All eigenpairs with unit eigenvectors, ordered by phase, then modulus.

    Raises:
        UnsupportedParameter: If the dimension exceeds 4096.
        ConvergenceFailure: If a pair misses the residual target ``1e-8 * op.scale``.
    """
    log = logger if logger is not None else _LOGGER
    if op.dimension > MAX_DIMENSION:
        raise UnsupportedParameter(
            f"Dense eigensolver supports dimension <= {MAX_DIMENSION}, got {op.dimension}"
        )
    matrix = np.array(op.matrix)
    target = RESIDUAL_TOL * op.scale

    if op.boundary == Boundary.PERIODIC:
        schur_form, vectors = linalg.schur(matrix, output="complex")
        values = np.diag(schur_form).copy()
        residuals = _residuals(matrix, values, vectors)
        if np.max(residuals) > target:
            log.warning(
                "Schur vectors miss the residual target (%.3e > %.3e); using general solver",
                np.max(residuals),
                target,
            )
            values, vectors = _general_eig(matrix)
            residuals = _residuals(matrix, values, vectors)
    else:
        values, vectors = _general_eig(matrix)
        residuals = _residuals(matrix, values, vectors)

    worst = float(np.max(residuals))
    if worst > target:
        raise ConvergenceFailure(
            f"Eigenpair residual {worst:.3e} exceeds target {target:.3e} "
            f"(dimension {op.dimension}, {op.boundary.value} boundary)"
        )
    log.debug("Eigendecomposition of dimension %d: max residual %.3e", op.dimension, worst)

    phases = reduce_phase(np.angle(values))
    order = np.lexsort((np.abs(values), phases))
    return [
        Eigenpair(
            eigenvalue=complex(values[j]),
            phase=float(phases[j]),
            vector=vectors[:, j],
            residual=float(residuals[j]),
        )
        for j in order
    ]
