"""
Band structure module.

The essential spectrum of the walk with bulk parameters ``(p, gamma)`` is the set of
``exp(i theta)`` with ``|cos(theta - gamma/2)| <= p``: two arcs of the unit circle

    J1 = [arccos(p) + gamma/2, pi - arccos(p) + gamma/2],   J2 = J1 + pi,

whose four endpoints are the thresholds, the phases where the level set of the dispersion
degenerates. At p = 1 the arcs close up to the full circle and the thresholds merge pairwise.

Classes:
    - BandStructure: Band arcs, thresholds and their multiplicities.
    - FermiKind: Regular or singular level-set point.
    - FermiPoint: A momentum on the level set of a spectral phase.
    - FermiSet: The level set of a spectral phase.

Functions:
    - essential_band: Band structure of the bulk parameters.
    - thresholds: Threshold phases.
    - fermi_set: Momenta solving the dispersion relation at a given phase.
"""

from dataclasses import dataclass
from typing import Any

import numpy as np

from ..base.choice import ChoiceEnum
from ..base.errors import UnsupportedParameter
from ..base.phase import (
    TWO_PI,
    arc_length,
    circular_distance,
    distance_to_arc,
    reduce_phase,
)
from ..lattice.params import ModelParams
from .dispersion import dispersion_derivative

THRESHOLD_TOL: float = 1e-12
REGULAR_TOL: float = 1e-10


def _require_positive_p(params: ModelParams) -> None:
    if params.p == 0.0:
        raise UnsupportedParameter(
            "Bands are undefined for p = 0: the essential spectrum is two points"
        )


@dataclass(frozen=True)
class BandStructure:
    """
    Essential-spectrum bands of the bulk walk.

    Attributes:
        arcs (tuple[tuple[float, float], ...]): The two arcs ``(lo, hi)`` in counter-clockwise
            order, endpoints in [0, 2pi).
        thresholds (tuple[float, ...]): Distinct threshold phases, ascending.
        multiplicities (tuple[int, ...]): Multiplicity of each threshold (2 where endpoints of
            both arcs coincide, i.e. at p = 1).
        degenerate (bool): True when the arcs cover the full circle (p = 1).
        p (float): Bulk p the bands were computed for.
        gamma (float): Bulk gamma the bands were computed for.
    """

    arcs: tuple[tuple[float, float], ...]
    thresholds: tuple[float, ...]
    multiplicities: tuple[int, ...]
    degenerate: bool
    p: float
    gamma: float

    @property
    def full_circle(self) -> bool:
        """Whether the bands cover the whole unit circle."""
        return self.degenerate

    def distance(self, theta: float) -> float:
        """Circular distance from a phase to the nearest band arc (zero inside a band)."""
        return min(distance_to_arc(theta, arc) for arc in self.arcs)

    def contains(self, theta: float, tol: float = 0.0) -> bool:
        """Whether a phase lies on a band arc, up to `tol`."""
        return self.distance(theta) <= tol

    def threshold_distance(self, theta: float) -> float:
        """Circular distance from a phase to the nearest threshold."""
        return float(min(circular_distance(theta, t) for t in self.thresholds))

    def is_interior(self, theta: float, guard: float = 0.0) -> bool:
        """Whether a phase lies in a band and farther than `guard` from every threshold."""
        return self.contains(theta) and self.threshold_distance(theta) > guard

    def interior_grid(self, step: float, guard: float) -> np.ndarray:
        """
        Phase grid inside the bands.

        Each arc is sampled from its lower end with spacing `step`; phases within `guard` of a
        threshold are dropped.

        Args:
            step (float): Grid spacing in radians, > 0.
            guard (float): Threshold exclusion radius in radians.

        Returns:
            np.ndarray: Ascending array of phases in [0, 2pi).
        """
        if step <= 0.0:
            raise ValueError(f"Grid step must be positive, got {step}")
        phases: list[float] = []
        for arc in self.arcs:
            if self.degenerate and phases:
                break
            length = TWO_PI if self.degenerate else arc_length(arc)
            offsets = np.arange(0.0, length, step)
            phases.extend(float(reduce_phase(arc[0] + t)) for t in offsets)
        grid = np.unique(np.asarray(phases, dtype=np.float64))
        keep = [self.threshold_distance(t) > guard for t in grid]
        return grid[np.asarray(keep, dtype=bool)] if grid.size else grid

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready representation ``{"arcs", "thresholds", "degenerate"}``."""
        return {
            "arcs": [[lo, hi] for lo, hi in self.arcs],
            "thresholds": list(self.thresholds),
            "degenerate": self.degenerate,
        }


def _endpoints(params: ModelParams) -> list[float]:
    eta = float(np.arccos(params.p))
    half = 0.5 * params.gamma
    return [
        float(reduce_phase(eta + half)),
        float(reduce_phase(np.pi - eta + half)),
        float(reduce_phase(np.pi + eta + half)),
        float(reduce_phase(TWO_PI - eta + half)),
    ]


def essential_band(params: ModelParams) -> BandStructure:
    """
    Essential-spectrum band structure of the bulk walk.

    Args:
        params (ModelParams): Bulk parameters, p in (0, 1].

    Returns:
        BandStructure: Two arcs and their endpoints as thresholds. At p = 1 the arcs cover the
        full circle, the structure is flagged degenerate and the two thresholds
        ``{gamma/2, pi + gamma/2}`` carry multiplicity 2.

    Raises:
        UnsupportedParameter: If p = 0.
    """
    _require_positive_p(params)
    ends = _endpoints(params)
    arcs = ((ends[0], ends[1]), (ends[2], ends[3]))
    degenerate = params.p == 1.0
    if degenerate:
        distinct = sorted({ends[0], ends[1]})
        multiplicities = (2, 2)
    else:
        distinct = sorted(ends)
        multiplicities = (1, 1, 1, 1)
    return BandStructure(
        arcs=arcs,
        thresholds=tuple(distinct),
        multiplicities=multiplicities,
        degenerate=degenerate,
        p=params.p,
        gamma=params.gamma,
    )


def thresholds(params: ModelParams) -> list[float]:
    """
    Threshold phases, the arguments of ``exp(i gamma/2)(+-p +- i sqrt(1 - p^2))``.

    Args:
        params (ModelParams): Bulk parameters, p in (0, 1].

    Returns:
        list[float]: Distinct phases in [0, 2pi), ascending (four for p < 1, two for p = 1).

    Raises:
        UnsupportedParameter: If p = 0.
    """
    return list(essential_band(params).thresholds)


class FermiKind(ChoiceEnum):
    """
    Kinds of level-set points.

    Members:
        REGULAR: The dispersion has a nonzero derivative in xi.
        SINGULAR: The derivative vanishes (threshold phases).
    """

    REGULAR = "regular"
    SINGULAR = "singular"


@dataclass(frozen=True)
class FermiPoint:
    """Momentum `xi` in [0, 2pi) on a level set, with its kind."""

    xi: float
    kind: FermiKind


@dataclass(frozen=True)
class FermiSet:
    """
    Level set of the dispersion at a spectral phase.

    Attributes:
        theta (float): Spectral phase in [0, 2pi).
        points (tuple[FermiPoint, ...]): Solutions ordered by xi.
    """

    theta: float
    points: tuple[FermiPoint, ...]

    @property
    def regular(self) -> tuple[FermiPoint, ...]:
        """Regular points of the set."""
        return tuple(pt for pt in self.points if pt.kind == FermiKind.REGULAR)

    @property
    def singular(self) -> tuple[FermiPoint, ...]:
        """Singular points of the set."""
        return tuple(pt for pt in self.points if pt.kind == FermiKind.SINGULAR)

    def __len__(self) -> int:
        return len(self.points)


def fermi_set(theta: float, params: ModelParams) -> FermiSet:
    """
    Momenta xi solving the dispersion relation ``p(xi, theta) = 0``.

    The relation reduces to ``cos(xi + alpha - gamma/2) = cos(theta - gamma/2) / p``. Inside a
    band it has two solutions, in a gap none, and at a threshold (equality within 1e-12) one
    solution at which the xi-derivative vanishes.

    Args:
        theta (float): Spectral phase in radians.
        params (ModelParams): Bulk parameters, p in (0, 1].

    Returns:
        FermiSet: The level set; each point is regular iff ``|d/dxi p(xi, theta)| > 1e-10``.

    Raises:
        UnsupportedParameter: If p = 0.
    """
    _require_positive_p(params)
    theta = float(reduce_phase(theta))
    half = 0.5 * params.gamma
    cos_theta = float(np.cos(theta - half))
    excess = abs(cos_theta) - params.p
    if excess > THRESHOLD_TOL:
        return FermiSet(theta, ())
    if abs(excess) <= THRESHOLD_TOL:
        angles = [0.0 if cos_theta > 0 else float(np.pi)]
    else:
        base = float(np.arccos(cos_theta / params.p))
        angles = [base, -base]
    xis = sorted({float(reduce_phase(a - params.alpha + half)) for a in angles})
    points = []
    for xi in xis:
        slope = abs(dispersion_derivative(xi, theta, params))
        kind = FermiKind.REGULAR if slope > REGULAR_TOL else FermiKind.SINGULAR
        points.append(FermiPoint(xi, kind))
    return FermiSet(theta, tuple(points))
