"""
Fourier symbol module.

For the homogeneous walk with bulk coin C0 a plane wave ``exp(i x xi) v`` is mapped to
``exp(i x xi) U0(xi) v`` with the symbol

    U0(xi) = [[a0 exp(i xi), b0 exp(i xi)], [c0 exp(-i xi), d0 exp(-i xi)]].

Its characteristic polynomial at ``lambda = exp(i theta)`` is the dispersion

    p(xi, theta) = exp(2 i theta) - 2 exp(i theta) p exp(i gamma/2) cos(phi) + exp(i gamma),
    phi = xi + alpha - gamma/2.

Functions:
    symbol_matrix(xi, params) -> NDArray: The 2x2 unitary symbol.
    symbol_eigenvalues(xi, params) -> tuple[complex, complex]: Closed-form eigenvalues.
    symbol_eigenvector(xi, params, branch) -> NDArray: Deterministic unit eigenvector.
    dispersion(xi, theta, params) -> complex | NDArray: The dispersion determinant.
    dispersion_derivative(xi, theta, params) -> complex | NDArray: Its derivative in xi.
"""

import numpy as np
from numpy.typing import NDArray, ArrayLike

from ..base.phase import reduce_phase
from ..lattice.coin import make_coin_c0
from ..lattice.params import ModelParams

_ZERO_TOL = 1e-14


def _phi(xi: ArrayLike, params: ModelParams) -> NDArray[np.float64]:
    return np.asarray(xi, dtype=np.float64) + params.alpha - 0.5 * params.gamma


def symbol_matrix(xi: float, params: ModelParams) -> NDArray[np.complex128]:
    """
    Fourier symbol of the homogeneous walk at momentum `xi`.

    Parameters
    ----------
    xi : float
        Momentum in radians.
    params : ModelParams
        Bulk coin parameters.

    Returns
    -------
    NDArray[np.complex128]
        The 2x2 unitary matrix ``[[a0 e^{i xi}, b0 e^{i xi}], [c0 e^{-i xi}, d0 e^{-i xi}]]``.
    """
    coin = make_coin_c0(params).matrix
    phase = np.array([[np.exp(1j * xi)], [np.exp(-1j * xi)]], dtype=np.complex128)
    return coin * phase


def symbol_eigenvalues(xi: float, params: ModelParams) -> tuple[complex, complex]:
    """
    Closed-form eigenvalues of the symbol, ordered by phase in [0, 2pi).

    The eigenvalues are ``exp(i gamma/2) (p cos(phi) +- i sqrt(1 - p^2 cos^2(phi)))``.

    Parameters
    ----------
    xi : float
        Momentum in radians.
    params : ModelParams
        Bulk coin parameters.

    Returns
    -------
    tuple[complex, complex]
        The two unimodular eigenvalues.
    """
    real = params.p * float(np.cos(_phi(xi, params)))
    imag = float(np.sqrt(max(0.0, 1.0 - real * real)))
    glob = np.exp(0.5j * params.gamma)
    pair = [complex(glob * (real + 1j * imag)), complex(glob * (real - 1j * imag))]
    pair.sort(key=lambda lam: float(reduce_phase(np.angle(lam))))
    return pair[0], pair[1]


def symbol_eigenvector(xi: float, params: ModelParams, branch: int = 0) -> NDArray[np.complex128]:
    """
    Deterministic unit eigenvector of the symbol.

    The vector is read off the row of ``U0(xi) - lambda`` with the larger coefficients and its
    phase is fixed so that the first component is real and non-negative; if the first component
    vanishes the second one is made real and non-negative.

    Parameters
    ----------
    xi : float
        Momentum in radians.
    params : ModelParams
        Bulk coin parameters.
    branch : int, optional
        Index (0 or 1) of the eigenvalue in the order of `symbol_eigenvalues`. Defaults to 0.

    Returns
    -------
    NDArray[np.complex128]
        Unit vector ``v`` with ``U0(xi) v = lambda_branch v``.

    Raises
    ------
    ValueError
        If `branch` is not 0 or 1.
    """
    if branch not in (0, 1):
        raise ValueError(f"Symbol branch must be 0 or 1, got {branch}")
    lam = symbol_eigenvalues(xi, params)[branch]
    mat = symbol_matrix(xi, params)
    from_row0 = np.array([mat[0, 1], lam - mat[0, 0]], dtype=np.complex128)
    from_row1 = np.array([lam - mat[1, 1], mat[1, 0]], dtype=np.complex128)
    vec = from_row0 if np.linalg.norm(from_row0) >= np.linalg.norm(from_row1) else from_row1
    if np.linalg.norm(vec) < _ZERO_TOL:
        # Scalar symbol: every vector is an eigenvector.
        vec = np.eye(2, dtype=np.complex128)[branch]
    vec = vec / np.linalg.norm(vec)
    pivot = vec[0] if abs(vec[0]) > _ZERO_TOL else vec[1]
    return vec * (abs(pivot) / pivot)


def dispersion(
    xi: ArrayLike, theta: ArrayLike, params: ModelParams
) -> complex | NDArray[np.complex128]:
    """
    Dispersion determinant ``det(U0(xi) - exp(i theta))``.

    Arguments broadcast against each other, so a whole (xi, theta) grid can be evaluated at once.

    Parameters
    ----------
    xi : ArrayLike
        Momentum (or array of momenta) in radians.
    theta : ArrayLike
        Spectral phase (or array of phases) in radians.
    params : ModelParams
        Bulk coin parameters.

    Returns
    -------
    complex | NDArray[np.complex128]
        Scalar for scalar input, array otherwise.
    """
    lam = np.exp(1j * np.asarray(theta, dtype=np.float64))
    glob = np.exp(0.5j * params.gamma)
    value = lam * lam - 2.0 * lam * params.p * glob * np.cos(_phi(xi, params)) + glob * glob
    if np.ndim(value) == 0:
        return complex(value)
    return value


def dispersion_derivative(
    xi: ArrayLike, theta: ArrayLike, params: ModelParams
) -> complex | NDArray[np.complex128]:
    """Derivative of the dispersion in xi: ``2 p exp(i gamma/2) exp(i theta) sin(phi)``."""
    lam = np.exp(1j * np.asarray(theta, dtype=np.float64))
    value = 2.0 * params.p * np.exp(0.5j * params.gamma) * lam * np.sin(_phi(xi, params))
    if np.ndim(value) == 0:
        return complex(value)
    return value
