"""
Compact kernel module.

An eigenfunction of the walk supported on a window ``S`` is a null vector of the linear map
``psi -> (U - lambda) psi`` from amplitudes on ``S`` to amplitudes on ``S`` grown by one site. The
map is assembled column by column from the coins on ``S``: the image of the basis state
``(x, c)`` is ``C(x)[0, c]`` at ``(x - 1, 0)``, ``C(x)[1, c]`` at ``(x + 1, 1)`` and ``-lambda`` at
``(x, c)``. The rows for component 1 at ``lo - 1`` and component 0 at ``hi + 1`` are
identically zero and are left out.

Functions:
    - kernel_map: Matrix of ``U - lambda`` from a support window to its one-site expansion.
    - kernel_singular_ratio: Smallest over largest singular value of that matrix.
    - compact_kernel: Orthonormal basis of the compactly supported eigenvectors.
"""

import logging
from logging import Logger
from typing import Optional

import numpy as np
from numpy.typing import NDArray
from scipy import linalg

from ..base.errors import WindowTooSmall
from ..lattice.field import CoinField
from ..lattice.state import State
from ..lattice.window import Window

NULL_RCOND: float = 1e-10

_LOGGER = logging.getLogger(__name__)


def _check_support(field: CoinField, support: Window) -> None:
    if support.expanded(1) not in field.window:
        raise WindowTooSmall(
            f"Support {support} must lie inside field window {field.window} "
            "with a one-site margin"
        )


def kernel_parts(
    field: CoinField, support: Window
) -> tuple[NDArray[np.complex128], NDArray[np.float64]]:
    """
    Lambda-independent parts ``(B, E)`` of the kernel map ``B - lambda E``.

    `B` is the step from `support` into its expansion, `E` the inclusion of `support` into it,
    both with the two structurally zero rows removed.

    Raises:
        WindowTooSmall: If `support` is not interior to the field window.
    """
    _check_support(field, support)
    n = support.size
    coins = field.coins_on(support)
    step_map = np.zeros((2 * (n + 2), 2 * n), dtype=np.complex128)
    inclusion = np.zeros((2 * (n + 2), 2 * n), dtype=np.float64)
    k = np.arange(n)
    for c in (0, 1):
        cols = 2 * k + c
        step_map[2 * k, cols] = coins[:, 0, c]
        step_map[2 * (k + 2) + 1, cols] = coins[:, 1, c]
        inclusion[2 * (k + 1) + c, cols] = 1.0
    rows = np.delete(np.arange(2 * (n + 2)), [1, 2 * (n + 1)])
    return step_map[rows], inclusion[rows]


def kernel_map(field: CoinField, lam: complex, support: Window) -> NDArray[np.complex128]:
    """
    Matrix of ``psi -> (U - lambda) psi`` for states supported on `support`.

    Args:
        field (CoinField): Coin field.
        lam (complex): Spectral parameter.
        support (Window): Support window, interior to the field window.

    Returns:
        NDArray[np.complex128]: Matrix of shape ``(2 * n + 2, 2 * n)``, ``n = support.size``.
    """
    step_map, inclusion = kernel_parts(field, support)
    return step_map - lam * inclusion


def kernel_singular_ratio(
    step_map: NDArray[np.complex128], inclusion: NDArray[np.float64], lam: complex
) -> float:
    """Smallest over largest singular value of ``B - lambda E``."""
    values = linalg.svdvals(step_map - lam * inclusion)
    if values[0] == 0.0:
        return 0.0
    return float(values[-1] / values[0])


def compact_kernel(
    field: CoinField,
    lam: complex,
    support: Window,
    logger: Optional[Logger] = None,
    rcond: float = NULL_RCOND,
) -> list[State]:
    """
    Orthonormal basis of the eigenvectors for `lam` supported on `support`.

    The basis spans the numerical null space of `kernel_map`: singular directions with
    singular value at most ``rcond`` times the largest one.

    Args:
        field (CoinField): Coin field.
        lam (complex): Spectral parameter.
        support (Window): Support window; the field window must contain it with a one-site
            margin.
        logger (Optional[Logger], optional): Logger for diagnostics.
        rcond (float, optional): Relative singular value cutoff. Defaults to 1e-10.

    Returns:
        list[State]: Orthonormal states on `support`; empty if the kernel is trivial.

    Raises:
        WindowTooSmall: If `support` is not interior to the field window.
    """
    log = logger if logger is not None else _LOGGER
    matrix = kernel_map(field, lam, support)
    basis = linalg.null_space(matrix, rcond=rcond)
    log.debug("Compact kernel at lambda=%s on %s: dimension %d", lam, support, basis.shape[1])
    return [State.from_vector(support, basis[:, j]) for j in range(basis.shape[1])]
