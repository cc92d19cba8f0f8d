"""
Coin matrix module.

This module builds the 2x2 unitary coins of the walk. The bulk coin is parametrized as

    C0 = exp(i gamma/2) [[ p exp(i(alpha - gamma/2)),  q exp(i(beta - gamma/2))],
                         [-q exp(-i(beta - gamma/2)),  p exp(-i(alpha - gamma/2))]]

with p^2 + q^2 = 1. The edge-defect coin is the anti-diagonal member of the same family (p = 0).

Classes:
    - CoinMatrix: Immutable 2x2 complex matrix with unitarity helpers.

Functions:
    - coin_array: Vectorized coin construction from (p, q, alpha, beta, gamma) arrays.
    - make_coin_c0: Bulk coin from `ModelParams`.
    - make_defect_coin: Anti-diagonal reflecting coin of an edge defect.
    - unitarity_defect: Largest entry of |M* M - I| over a stack of matrices.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray, ArrayLike

from .params import ModelParams

UNITARY_TOL: float = 1e-12


def coin_array(
    p: ArrayLike, q: ArrayLike, alpha: ArrayLike, beta: ArrayLike, gamma: ArrayLike
) -> NDArray[np.complex128]:
    """
    Vectorized coin construction.

    All arguments broadcast against each other; the result has shape ``broadcast + (2, 2)``.

    Parameters
    ----------
    p, q : ArrayLike
        Moduli of the diagonal and off-diagonal entries, with p^2 + q^2 = 1.
    alpha, beta, gamma : ArrayLike
        Coin phases in radians.

    Returns
    -------
    NDArray[np.complex128]
        Stack of unitary 2x2 coins.
    """
    p_, q_, a_, b_, g_ = np.broadcast_arrays(
        *(np.asarray(v, dtype=np.float64) for v in (p, q, alpha, beta, gamma))
    )
    half = 0.5 * g_
    glob = np.exp(1j * half)
    out = np.empty(p_.shape + (2, 2), dtype=np.complex128)
    out[..., 0, 0] = glob * p_ * np.exp(1j * (a_ - half))
    out[..., 0, 1] = glob * q_ * np.exp(1j * (b_ - half))
    out[..., 1, 0] = -glob * q_ * np.exp(-1j * (b_ - half))
    out[..., 1, 1] = glob * p_ * np.exp(-1j * (a_ - half))
    return out


def unitarity_defect(matrices: NDArray[np.complex128]) -> float:
    """
    Largest entry of |M* M - I| over a stack of matrices.

    Parameters
    ----------
    matrices : NDArray[np.complex128]
        Array of shape ``(..., n, n)``.

    Returns
    -------
    float
        Maximum absolute deviation from the identity.
    """
    mats = np.asarray(matrices, dtype=np.complex128)
    gram = np.conj(np.swapaxes(mats, -1, -2)) @ mats
    eye = np.eye(mats.shape[-1], dtype=np.complex128)
    if gram.size == 0:
        return 0.0
    return float(np.max(np.abs(gram - eye)))


@dataclass(frozen=True, eq=False)
class CoinMatrix:
    """
    Immutable 2x2 complex coin.

    Attributes
    ----------
    matrix : NDArray[np.complex128]
        The 2x2 matrix, row-major entries ``[[a, b], [c, d]]``. Stored read-only.
    """

    matrix: NDArray[np.complex128]

    def __post_init__(self) -> None:
        mat = np.array(self.matrix, dtype=np.complex128)
        if mat.shape != (2, 2):
            raise ValueError(f"Coin matrix must be 2x2, got shape {mat.shape}")
        if not np.all(np.isfinite(mat)):
            raise ValueError("Coin matrix entries must be finite")
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    @property
    def a(self) -> complex:
        """Entry (0, 0)."""
        return complex(self.matrix[0, 0])

    @property
    def b(self) -> complex:
        """Entry (0, 1)."""
        return complex(self.matrix[0, 1])

    @property
    def c(self) -> complex:
        """Entry (1, 0)."""
        return complex(self.matrix[1, 0])

    @property
    def d(self) -> complex:
        """Entry (1, 1)."""
        return complex(self.matrix[1, 1])

    @property
    def P(self) -> NDArray[np.complex128]:  # pylint: disable=invalid-name
        """Upper row projection [[a, b], [0, 0]]; acts on the left-moving component."""
        out = np.zeros((2, 2), dtype=np.complex128)
        out[0] = self.matrix[0]
        return out

    @property
    def Q(self) -> NDArray[np.complex128]:  # pylint: disable=invalid-name
        """Lower row projection [[0, 0], [c, d]]; acts on the right-moving component."""
        out = np.zeros((2, 2), dtype=np.complex128)
        out[1] = self.matrix[1]
        return out

    def unitarity_defect(self) -> float:
        """Largest entry of |C* C - I|."""
        return unitarity_defect(self.matrix)

    def is_unitary(self, tol: float = UNITARY_TOL) -> bool:
        """Whether the coin is unitary within `tol` per entry."""
        return self.unitarity_defect() <= tol

    def distance_inf(self, other: "CoinMatrix") -> float:
        """Max-entry norm of the difference of two coins."""
        return float(np.max(np.abs(self.matrix - other.matrix)))

    def allclose(self, other: "CoinMatrix", atol: float = 1e-12) -> bool:
        """Entry-wise comparison within `atol`."""
        return bool(np.allclose(self.matrix, other.matrix, rtol=0.0, atol=atol))

    def __repr__(self) -> str:
        return f"CoinMatrix({self.matrix.tolist()})"


def make_coin_c0(params: ModelParams) -> CoinMatrix:
    """
    Bulk coin C0 of the homogeneous walk.

    Parameters
    ----------
    params : ModelParams
        Bulk parameters (p, alpha, beta, gamma).

    Returns
    -------
    CoinMatrix
        The unitary coin C0.
    """
    return CoinMatrix(coin_array(params.p, params.q, params.alpha, params.beta, params.gamma))


def make_defect_coin(beta_prime: float, gamma_prime: float) -> CoinMatrix:
    """
    Anti-diagonal reflecting coin C1 placed on edge-defect sites.

    Parameters
    ----------
    beta_prime : float
        Off-diagonal phase.
    gamma_prime : float
        Global phase.

    Returns
    -------
    CoinMatrix
        ``exp(i g'/2) [[0, exp(i(b' - g'/2))], [-exp(-i(b' - g'/2)), 0]]``.
    """
    return CoinMatrix(coin_array(0.0, 1.0, 0.0, beta_prime, gamma_prime))
