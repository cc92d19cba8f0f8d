"""
Time evolution module.

One step of the walk is ``(U psi)(x) = P(x+1) psi(x+1) + Q(x-1) psi(x-1)``: the coin acts on
every site, then component 0 moves one site left and component 1 one site right.

Functions:
    step(state, field, boundary) -> State
        Apply U once.
    evolve(psi0, field, steps, boundary, logger) -> list[State]
        Trajectory psi(t) = U^t psi0 for t = 0..steps.
    position_distribution(state) -> dict[int, float]
        Probabilities |psi(t, x)|^2 by site.
"""

import logging
from logging import Logger
from typing import Optional

import numpy as np

from ..base.errors import UnsupportedParameter, WindowMismatch, WindowTooSmall
from .boundary import Boundary
from .field import CoinField
from .state import State

_LOGGER = logging.getLogger(__name__)


def step(state: State, field: CoinField, boundary: Boundary = Boundary.PADDED) -> State:
    """
    Apply the evolution operator U = SC once.

    Parameters
    ----------
    state : State
        Current state.
    field : CoinField
        Coin field. For ``padded`` and ``truncate`` its window must contain the state window;
        for ``periodic`` the windows must be equal.
    boundary : Boundary, optional
        ``padded`` grows the window by one site each side (exact, norm preserving);
        ``periodic`` wraps the shift around the window; ``truncate`` keeps the window and
        drops amplitudes that leave it. Defaults to ``padded``.

    Returns
    -------
    State
        The evolved state.

    Raises
    ------
    WindowMismatch
        If the state and field windows are incompatible with the boundary mode.
    """
    boundary = Boundary(boundary)
    window = state.window
    if boundary == Boundary.PERIODIC:
        if window != field.window:
            raise WindowMismatch(
                f"Periodic step needs equal windows, got state {window} and field {field.window}"
            )
    elif window not in field.window:
        raise WindowMismatch(f"Field window {field.window} does not contain state window {window}")

    coined = np.einsum("nij,nj->ni", field.coins_on(window), state.amp)
    n = window.size
    if boundary == Boundary.PADDED:
        out = np.zeros((n + 2, 2), dtype=np.complex128)
        out[:n, 0] = coined[:, 0]
        out[2:, 1] = coined[:, 1]
        return State(window.expanded(1), out)
    out = np.zeros((n, 2), dtype=np.complex128)
    if boundary == Boundary.PERIODIC:
        out[:, 0] = np.roll(coined[:, 0], -1)
        out[:, 1] = np.roll(coined[:, 1], 1)
    else:
        out[:-1, 0] = coined[1:, 0]
        out[1:, 1] = coined[:-1, 1]
    return State(window, out)


def evolve(
    psi0: State,
    field: CoinField,
    steps: int,
    boundary: Boundary = Boundary.PADDED,
    logger: Optional[Logger] = None,
) -> list[State]:
    """
    Evolve an initial state for a number of steps.

    Args:
        psi0 (State): Initial state.
        field (CoinField): Coin field. With ``padded`` boundary it must cover the window of
            `psi0` expanded by `steps` sites on each side.
        steps (int): Number of steps, >= 0.
        boundary (Boundary, optional): Boundary mode. Defaults to ``padded``.
        logger (Optional[Logger], optional): Logger for progress messages.

    Returns:
        list[State]: ``[psi0, U psi0, ..., U^steps psi0]``.

    Raises:
        UnsupportedParameter: If `steps` is negative.
        WindowTooSmall: If the padded evolution would leave the field window.
        WindowMismatch: If the windows are incompatible with the boundary mode.
    """
    log = logger if logger is not None else _LOGGER
    boundary = Boundary(boundary)
    if steps < 0:
        raise UnsupportedParameter(f"Number of steps must be non-negative, got {steps}")
    if boundary == Boundary.PADDED and psi0.window.expanded(steps) not in field.window:
        raise WindowTooSmall(
            f"Field window {field.window} does not cover {psi0.window} expanded by {steps} sites"
        )
    trajectory = [psi0]
    state = psi0
    for t in range(steps):
        state = step(state, field, boundary)
        trajectory.append(state)
        log.debug("Step %d: window %s, norm^2 %.17g", t + 1, state.window, state.norm_squared())
    log.info("Evolved %d steps with %s boundary", steps, boundary.value)
    return trajectory


def position_distribution(state: State) -> dict[int, float]:
    """
    Position distribution P(x) = |a0(x)|^2 + |a1(x)|^2 over the state window.

    Args:
        state (State): The state.

    Returns:
        dict[int, float]: Probability by site; sums to the squared norm.
    """
    probs = state.probabilities()
    return {int(x): float(p) for x, p in zip(state.window.sites, probs)}
