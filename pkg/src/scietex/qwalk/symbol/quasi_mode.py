"""
Quasi-mode module.

A quasi-mode is a plane wave ``exp(i x xi) v(xi)``, with ``v`` an eigenvector of the symbol, cut
off sharply to a window of `width` sites and normalized. On the full lattice the homogeneous walk
maps it to ``exp(i theta)`` times itself except at the two cutoff edges, so the residual
``||(U0 - exp(i theta)) psi||`` equals ``sqrt(2 / width)`` and tends to zero. On a ring of `width`
sites a commensurate momentum ``xi = 2 pi k / width`` gives an exact eigenvector.

Classes:
    - QuasiMode: State, spectral phase and residual.

Functions:
    - quasi_mode: Build a quasi-mode and measure its residual.
"""

from typing import NamedTuple

import numpy as np

from ..base.errors import UnsupportedParameter
from ..base.phase import reduce_phase
from ..lattice.boundary import Boundary
from ..lattice.coin import make_coin_c0
from ..lattice.evolution import step
from ..lattice.field import CoinField
from ..lattice.params import ModelParams
from ..lattice.state import State
from ..lattice.window import Window
from .dispersion import symbol_eigenvalues, symbol_eigenvector

MIN_WIDTH: int = 8


class QuasiMode(NamedTuple):
    """Windowed plane wave with its spectral phase and residual."""

    state: State
    theta: float
    residual: float


# pylint: disable=too-many-arguments,too-many-positional-arguments
def quasi_mode(
    xi: float,
    width: int,
    params: ModelParams,
    branch: int = 0,
    periodic: bool = False,
) -> QuasiMode:
    """
    Windowed plane wave of the homogeneous walk.

    Parameters
    ----------
    xi : float
        Momentum in radians.
    width : int
        Number of sites of the cutoff window, >= 8. The window is ``[0, width - 1]``.
    params : ModelParams
        Bulk coin parameters.
    branch : int, optional
        Which symbol eigenvalue (0 or 1, phase order) sets theta. Defaults to 0.
    periodic : bool, optional
        If True the residual is measured for the walk on a ring of `width` sites instead of
        the full lattice. Defaults to False.

    Returns
    -------
    QuasiMode
        Normalized state, theta in [0, 2pi) and residual ``||(U0 - e^{i theta}) psi||``.

    Raises
    ------
    UnsupportedParameter
        If ``width < 8``.
    """
    if width < MIN_WIDTH:
        raise UnsupportedParameter(f"Quasi-mode width must be at least {MIN_WIDTH}, got {width}")
    lam = symbol_eigenvalues(xi, params)[branch]
    vec = symbol_eigenvector(xi, params, branch)
    window = Window(0, width - 1)
    wave = np.exp(1j * xi * window.sites.astype(np.float64)) / np.sqrt(width)
    state = State(window, wave[:, None] * vec[None, :])

    coin = make_coin_c0(params)
    if periodic:
        moved = step(state, CoinField.constant(window, coin), Boundary.PERIODIC)
    else:
        padded = window.expanded(1)
        moved = step(state, CoinField.constant(padded, coin), Boundary.PADDED)
    residual = moved.distance(state.scaled(lam))
    return QuasiMode(state, float(reduce_phase(np.angle(lam))), residual)
