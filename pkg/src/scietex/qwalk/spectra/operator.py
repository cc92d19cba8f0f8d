"""
Truncated operator module.

A truncation of U = SC to a window is the dense matrix of the time step on the amplitudes of
the window, in the basis ordered by site, then by component (index ``2 * (x - lo) + c``). Two
closures are supported:

- ``periodic``: the shift wraps around the window, the matrix stays unitary;
- ``truncate``: amplitudes leaving the window are dropped, the matrix is a contraction.

Classes:
    - TruncatedOperator: Immutable dense truncation of U.

Functions:
    - build_matrix: Truncate a coin field to a window.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from ..base.errors import UnsupportedParameter, WindowMismatch
from ..lattice.boundary import Boundary
from ..lattice.coin import unitarity_defect
from ..lattice.field import CoinField
from ..lattice.state import State
from ..lattice.window import Window


@dataclass(frozen=True, eq=False)
class TruncatedOperator:
    """
    Dense truncation of the evolution operator.

    Attributes:
        window (Window): Sites of the truncation.
        boundary (Boundary): ``periodic`` or ``truncate``.
        matrix (NDArray[np.complex128]): Read-only square matrix of dimension
            ``2 * window.size``.
    """

    window: Window
    boundary: Boundary
    matrix: NDArray[np.complex128]

    def __post_init__(self) -> None:
        mat = np.array(self.matrix, dtype=np.complex128)
        dim = 2 * self.window.size
        if mat.shape != (dim, dim):
            raise ValueError(f"Matrix shape {mat.shape} does not match window {self.window}")
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "boundary", Boundary(self.boundary))

    @property
    def dimension(self) -> int:
        """Matrix dimension, twice the number of sites."""
        return 2 * self.window.size

    @property
    def scale(self) -> float:
        """Dimension-normalized matrix scale ``max(1, ||M||_F / sqrt(dim))``."""
        return max(1.0, float(np.linalg.norm(self.matrix)) / np.sqrt(self.dimension))

    def apply(self, state: State) -> State:
        """Matrix action on a state living on the operator window."""
        if state.window != self.window:
            raise WindowMismatch(
                f"State window {state.window} differs from operator window {self.window}"
            )
        return State.from_vector(self.window, self.matrix @ state.vector())

    def unitarity_defect(self) -> float:
        """Largest entry of |M* M - I|."""
        return unitarity_defect(self.matrix)

    def operator_norm(self) -> float:
        """Spectral norm of the matrix."""
        return float(np.linalg.norm(self.matrix, ord=2))

    def __repr__(self) -> str:
        return (
            f"TruncatedOperator(window={self.window}, boundary={self.boundary.value}, "
            f"dimension={self.dimension})"
        )


def build_matrix(
    field: CoinField, window: Window, boundary: Boundary = Boundary.PERIODIC
) -> TruncatedOperator:
    """
    Truncate the evolution operator of a coin field to a window.

    Column ``2k + c`` is the image of the basis state at site ``lo + k``, component `c`: the
    coin column ``C(x)[:, c]`` split into its left-moving entry at ``(x - 1, 0)`` and its
    right-moving entry at ``(x + 1, 1)``. The periodic closure wraps those sites around the
    window, the hard truncation drops them.

    Parameters
    ----------
    field : CoinField
        Coin field whose window contains `window`.
    window : Window
        Sites of the truncation.
    boundary : Boundary, optional
        ``periodic`` (default) or ``truncate``.

    Returns
    -------
    TruncatedOperator
        The dense truncation.

    Raises
    ------
    WindowMismatch
        If `window` is not contained in the field window.
    UnsupportedParameter
        If `boundary` is ``padded``, which has no finite matrix.
    """
    boundary = Boundary(boundary)
    if boundary == Boundary.PADDED:
        raise UnsupportedParameter("Padded boundary has no finite matrix; use periodic or truncate")
    if window not in field.window:
        raise WindowMismatch(f"Field window {field.window} does not contain {window}")

    n = window.size
    coins = field.coins_on(window)
    matrix = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    k = np.arange(n)
    left, right = k - 1, k + 1
    if boundary == Boundary.PERIODIC:
        left, right = np.mod(left, n), np.mod(right, n)
    keep_left = (left >= 0) & (left < n)
    keep_right = (right >= 0) & (right < n)
    for c in (0, 1):
        cols = 2 * k + c
        matrix[2 * left[keep_left], cols[keep_left]] = coins[keep_left, 0, c]
        matrix[2 * right[keep_right] + 1, cols[keep_right]] = coins[keep_right, 1, c]
    return TruncatedOperator(window, boundary, matrix)
