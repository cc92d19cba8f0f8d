"""
Phase arithmetic on the torus R / 2piZ.

Phases are stored reduced to [0, 2pi) and compared by circular distance. Arcs are ordered
endpoint pairs `(lo, hi)` traversed counter-clockwise from `lo` to `hi`; an arc may wrap
through zero, in which case `hi < lo`.

Functions:
    reduce_phase(theta) -> float | NDArray: Reduce phases to [0, 2pi).
    circular_distance(a, b) -> float | NDArray: Distance of two phases on the circle.
    arc_length(arc) -> float: Counter-clockwise length of an arc.
    in_arc(theta, arc) -> bool: Whether a phase lies on a closed arc.
    distance_to_arc(theta, arc) -> float: Circular distance from a phase to a closed arc.
"""

import numpy as np
from numpy.typing import NDArray

TWO_PI = 2.0 * np.pi


def reduce_phase(theta: float | NDArray[np.float64]) -> float | NDArray[np.float64]:
    """
    Reduce phase(s) to the interval [0, 2pi).

    `np.mod` can return exactly 2pi for tiny negative inputs; those are folded back to 0.

    Args:
        theta (Union[float, NDArray[np.float64]]): Phase or array of phases in radians.

    Returns:
        Union[float, NDArray[np.float64]]: Reduced phase(s), matching the input type.
    """
    reduced = np.mod(np.asarray(theta, dtype=np.float64), TWO_PI)
    reduced = np.where(reduced >= TWO_PI, 0.0, reduced)
    return reduced if isinstance(theta, np.ndarray) else float(reduced)


def circular_distance(
    a: float | NDArray[np.float64], b: float | NDArray[np.float64]
) -> float | NDArray[np.float64]:
    """
    Distance between phases on the circle, in [0, pi].

    Args:
        a (Union[float, NDArray[np.float64]]): First phase(s).
        b (Union[float, NDArray[np.float64]]): Second phase(s), broadcast against `a`.

    Returns:
        Union[float, NDArray[np.float64]]: Circular distance(s).
    """
    d = np.mod(np.asarray(a, dtype=np.float64) - np.asarray(b, dtype=np.float64), TWO_PI)
    d = np.minimum(d, TWO_PI - d)
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return d
    return float(d)


def arc_length(arc: tuple[float, float]) -> float:
    """Counter-clockwise length of the arc from ``arc[0]`` to ``arc[1]``."""
    length = float(np.mod(arc[1] - arc[0], TWO_PI))
    if length == 0.0 and arc[0] != arc[1]:
        return TWO_PI
    return length


def in_arc(theta: float, arc: tuple[float, float], tol: float = 0.0) -> bool:
    """
    Whether a phase lies on a closed arc, up to a tolerance.

    Args:
        theta (float): Phase in radians.
        arc (tuple[float, float]): Arc endpoints, counter-clockwise.
        tol (float, optional): Slack added on both ends. Defaults to 0.

    Returns:
        bool: True if `theta` is on the arc or within `tol` of it.
    """
    return distance_to_arc(theta, arc) <= tol


def distance_to_arc(theta: float, arc: tuple[float, float]) -> float:
    """
    Circular distance from a phase to a closed arc (zero on the arc).

    Args:
        theta (float): Phase in radians.
        arc (tuple[float, float]): Arc endpoints, counter-clockwise.

    Returns:
        float: Distance in [0, pi].
    """
    offset = float(np.mod(theta - arc[0], TWO_PI))
    if offset <= arc_length(arc):
        return 0.0
    return float(min(circular_distance(theta, arc[0]), circular_distance(theta, arc[1])))
