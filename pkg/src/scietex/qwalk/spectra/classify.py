"""
Spectrum classification module.

Eigenvalues of a truncation are labeled against the analytic band structure:

1. ``non_unimodular``: ``||lambda| - 1| > circle`` (artifacts of the hard truncation);
2. ``near_threshold``: phase within ``threshold_radius`` of a threshold;
3. ``gap_discrete``: phase outside the bands by more than ``band_edge``;
4. ``band_localized_embedded``: in a band with localization measure >= ``localization``;
5. ``band_extended``: every other eigenvalue.

The rules are applied in this order, so the labels partition the spectrum.

Classes:
    - SpectrumLabel: Classification labels.
    - ClassifyTolerances: Tolerances of the rules above.
    - SpectrumReport: Labeled eigenpairs.
    - DoublingCheck: Localized eigenvalues that do or do not recur on a doubled window.

Functions:
    - localization_measure: Largest probability mass within a radius of some site.
    - classify: Label eigenpairs.
    - band_hausdorff_distance: Circular Hausdorff distance from phases to the bands.
    - doubling_stable: Compare localized eigenvalues of two window sizes.
    - spectrum_of: Build, eigendecompose and classify in one call.
"""

import logging
from dataclasses import dataclass
from logging import Logger
from typing import Any, NamedTuple, Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field

from ..base.choice import ChoiceEnum
from ..base.errors import UnsupportedParameter
from ..base.phase import circular_distance, reduce_phase
from ..lattice.boundary import Boundary
from ..lattice.field import CoinField
from ..lattice.params import ModelParams
from ..lattice.window import Window
from ..symbol.bands import BandStructure, essential_band
from .eigensolve import Eigenpair, eigendecompose
from .operator import build_matrix

_LOGGER = logging.getLogger(__name__)

BAND_EDGE_PERIODIC: float = 1e-9
BAND_EDGE_TRUNCATE: float = 0.02


class SpectrumLabel(ChoiceEnum):
    """
    Labels of classified eigenvalues.

    Members:
        BAND_EXTENDED: In a band, extended eigenvector (finite-size band state).
        BAND_LOCALIZED_EMBEDDED: In a band, localized eigenvector (embedded eigenvalue).
        GAP_DISCRETE: Outside the bands (discrete eigenvalue in a gap).
        NEAR_THRESHOLD: Too close to a threshold to decide.
        NON_UNIMODULAR: Off the unit circle.
    """

    BAND_EXTENDED = "band_extended"
    BAND_LOCALIZED_EMBEDDED = "band_localized_embedded"
    GAP_DISCRETE = "gap_discrete"
    NEAR_THRESHOLD = "near_threshold"
    NON_UNIMODULAR = "non_unimodular"


class ClassifyTolerances(BaseModel):
    """
    Tolerances of the classification rules.

    Attributes:
        circle (float): Allowed deviation of |lambda| from 1. Defaults to 1e-6.
        threshold_radius (float): Exclusion radius around thresholds, radians. Defaults to 0.05.
        band_edge (Optional[float]): Allowed distance outside a band, radians. None selects
            1e-9 for periodic and 0.02 for truncated operators.
        localization (float): Localization measure of embedded eigenvectors. Defaults to 0.99.
        radius (int): Radius in sites of the localization measure. Defaults to 10.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    circle: float = Field(default=1e-6, ge=0.0)
    threshold_radius: float = Field(default=0.05, ge=0.0)
    band_edge: Optional[float] = Field(default=None, ge=0.0)
    localization: float = Field(default=0.99, ge=0.0, le=1.0)
    radius: int = Field(default=10, ge=0)

    def resolved(self, periodic: bool) -> "ClassifyTolerances":
        """Copy with `band_edge` filled in for the given closure."""
        if self.band_edge is not None:
            return self
        edge = BAND_EDGE_PERIODIC if periodic else BAND_EDGE_TRUNCATE
        return self.model_copy(update={"band_edge": edge})


def localization_measure(vector: ArrayLike, radius: int = 10, periodic: bool = False) -> float:
    """
    Largest probability mass found within `radius` sites of a single center.

    Args:
        vector (ArrayLike): Flat vector in (site, component) order.
        radius (int, optional): Radius R in sites. Defaults to 10.
        periodic (bool, optional): Whether the window wraps around. Defaults to False.

    Returns:
        float: Value in [0, 1], relative to the total mass of `vector` (0 for the zero vector).
    """
    amp = np.asarray(vector, dtype=np.complex128).reshape(-1, 2)
    mass = np.sum(np.abs(amp) ** 2, axis=1)
    total = float(np.sum(mass))
    if total == 0.0:
        return 0.0
    n = mass.size
    if 2 * radius + 1 >= n:
        return 1.0
    if periodic:
        padded = np.concatenate([mass[n - radius :], mass, mass[:radius]])
        sums = np.convolve(padded, np.ones(2 * radius + 1), mode="valid")
    else:
        sums = np.convolve(mass, np.ones(2 * radius + 1), mode="same")
    return float(min(1.0, np.max(sums) / total))


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """
    Classified spectrum of a truncated operator.

    Attributes:
        eigenpairs (tuple[Eigenpair, ...]): Eigenpairs in phase order.
        labels (tuple[SpectrumLabel, ...]): One label per eigenpair.
        loc_measures (tuple[float, ...]): Localization measure per eigenpair.
        band (BandStructure): Band structure the labels refer to.
        tolerances (ClassifyTolerances): Tolerances used, `band_edge` resolved.
        window (Optional[Window]): Window of the truncation, if known.
        boundary (Optional[Boundary]): Closure of the truncation, if known.
    """

    eigenpairs: tuple[Eigenpair, ...]
    labels: tuple[SpectrumLabel, ...]
    loc_measures: tuple[float, ...]
    band: BandStructure
    tolerances: ClassifyTolerances
    window: Optional[Window] = None
    boundary: Optional[Boundary] = None

    def with_label(self, *labels: SpectrumLabel) -> list[Eigenpair]:
        """Eigenpairs carrying any of the given labels."""
        return [pair for pair, lab in zip(self.eigenpairs, self.labels) if lab in labels]

    def counts(self) -> dict[str, int]:
        """Number of eigenpairs per label (all labels present as keys)."""
        out = {label.value: 0 for label in SpectrumLabel}
        for label in self.labels:
            out[label.value] += 1
        return out

    def rows(self) -> list[dict[str, Any]]:
        """One record per eigenvalue: ``re, im, phase, modulus, label, loc_measure``."""
        return [
            {
                "re": pair.eigenvalue.real,
                "im": pair.eigenvalue.imag,
                "phase": pair.phase,
                "modulus": pair.modulus,
                "label": label.value,
                "loc_measure": loc,
            }
            for pair, label, loc in zip(self.eigenpairs, self.labels, self.loc_measures)
        ]

    def __len__(self) -> int:
        return len(self.eigenpairs)


def classify(
    pairs: Sequence[Eigenpair],
    band: BandStructure,
    tol: Optional[ClassifyTolerances] = None,
    periodic: bool = False,
) -> SpectrumReport:
    """
    Label eigenpairs against the band structure.

    Args:
        pairs (Sequence[Eigenpair]): Eigenpairs to label.
        band (BandStructure): Analytic band structure.
        tol (Optional[ClassifyTolerances], optional): Tolerances; defaults apply when None.
        periodic (bool, optional): Whether the eigenvectors live on a periodic window. Selects
            the default band-edge tolerance and the wrap-around of the localization measure.

    Returns:
        SpectrumReport: Labeled eigenpairs.
    """
    tol = (tol if tol is not None else ClassifyTolerances()).resolved(periodic)
    band_edge = float(tol.band_edge) if tol.band_edge is not None else BAND_EDGE_PERIODIC
    labels = []
    measures = []
    for pair in pairs:
        loc = localization_measure(pair.vector, tol.radius, periodic)
        measures.append(loc)
        if abs(pair.modulus - 1.0) > tol.circle:
            labels.append(SpectrumLabel.NON_UNIMODULAR)
        elif band.threshold_distance(pair.phase) <= tol.threshold_radius:
            labels.append(SpectrumLabel.NEAR_THRESHOLD)
        elif band.distance(pair.phase) > band_edge:
            labels.append(SpectrumLabel.GAP_DISCRETE)
        elif loc >= tol.localization:
            labels.append(SpectrumLabel.BAND_LOCALIZED_EMBEDDED)
        else:
            labels.append(SpectrumLabel.BAND_EXTENDED)
    return SpectrumReport(
        eigenpairs=tuple(pairs),
        labels=tuple(labels),
        loc_measures=tuple(measures),
        band=band,
        tolerances=tol,
    )


def band_hausdorff_distance(phases: ArrayLike, band: BandStructure, step: float = 1e-3) -> float:
    """
    Circular Hausdorff distance between a finite phase set and the band arcs.

    The band side is sampled with spacing `step`, so the result is accurate to ``step / 2``.

    Args:
        phases (ArrayLike): Phases in radians.
        band (BandStructure): Band structure.
        step (float, optional): Sampling step of the arcs. Defaults to 1e-3.

    Returns:
        float: Hausdorff distance, ``inf`` for an empty phase set.
    """
    values = np.asarray(phases, dtype=np.float64).reshape(-1)
    if values.size == 0:
        return float("inf")
    to_band = max(band.distance(float(t)) for t in values)
    samples = band.interior_grid(step, 0.0)
    samples = np.concatenate([samples, np.asarray(band.thresholds)])
    from_band = np.max(np.min(circular_distance(samples[:, None], values[None, :]), axis=1))
    return float(max(to_band, from_band))


class DoublingCheck(NamedTuple):
    """Localized eigenvalues of the smaller window that do and do not recur."""

    stable: tuple[complex, ...]
    unstable: tuple[complex, ...]

    @property
    def ok(self) -> bool:
        """True if every localized eigenvalue recurs."""
        return not self.unstable


def doubling_stable(
    report_small: SpectrumReport,
    report_large: SpectrumReport,
    tol: float = 1e-6,
    labels: Sequence[SpectrumLabel] = (
        SpectrumLabel.BAND_LOCALIZED_EMBEDDED,
        SpectrumLabel.GAP_DISCRETE,
    ),
) -> DoublingCheck:
    """
    Check that localized eigenvalues recur when the window is doubled.

    An eigenvalue of `report_small` carrying one of `labels` is stable if `report_large` has an
    eigenvalue with the same label within `tol`.

    Args:
        report_small (SpectrumReport): Spectrum on the smaller window.
        report_large (SpectrumReport): Spectrum on the larger window.
        tol (float, optional): Matching distance in the complex plane. Defaults to 1e-6.
        labels (Sequence[SpectrumLabel], optional): Labels to check.

    Returns:
        DoublingCheck: Stable and unstable eigenvalues, in phase order.
    """
    stable: list[complex] = []
    unstable: list[complex] = []
    for label in labels:
        large = np.array(
            [pair.eigenvalue for pair in report_large.with_label(label)], dtype=np.complex128
        )
        for pair in report_small.with_label(label):
            found = large.size > 0 and bool(np.min(np.abs(large - pair.eigenvalue)) <= tol)
            (stable if found else unstable).append(pair.eigenvalue)
    return DoublingCheck(
        tuple(sorted(stable, key=_phase_key)), tuple(sorted(unstable, key=_phase_key))
    )


def _phase_key(lam: complex) -> float:
    return float(reduce_phase(np.angle(lam)))


# pylint: disable=too-many-arguments,too-many-positional-arguments
def spectrum_of(
    field: CoinField,
    boundary: Boundary = Boundary.PERIODIC,
    tolerances: Optional[ClassifyTolerances] = None,
    params: Optional[ModelParams] = None,
    window: Optional[Window] = None,
    logger: Optional[Logger] = None,
) -> SpectrumReport:
    """
    Truncate, eigendecompose and classify in one call.

    Args:
        field (CoinField): Coin field.
        boundary (Boundary, optional): ``periodic`` (default) or ``truncate``.
        tolerances (Optional[ClassifyTolerances], optional): Classification tolerances.
        params (Optional[ModelParams], optional): Bulk parameters defining the bands; taken
            from the field recipe when None.
        window (Optional[Window], optional): Truncation window; defaults to the field window.
        logger (Optional[Logger], optional): Logger for stage messages.

    Returns:
        SpectrumReport: Classified spectrum, with window and boundary recorded.

    Raises:
        UnsupportedParameter: If no bulk parameters are available, or p = 0.
    """
    log = logger if logger is not None else _LOGGER
    boundary = Boundary(boundary)
    if params is None:
        if field.recipe is None:
            raise UnsupportedParameter("Bulk parameters are needed for a field without recipe")
        params = field.recipe.params
    band = essential_band(params)
    window = window if window is not None else field.window
    op = build_matrix(field, window, boundary)
    log.info("Eigendecomposition of %s truncation on %s", boundary.value, window)
    pairs = eigendecompose(op, logger=log)
    report = classify(pairs, band, tolerances, periodic=boundary == Boundary.PERIODIC)
    log.info("Spectrum labels: %s", report.counts())
    return SpectrumReport(
        eigenpairs=report.eigenpairs,
        labels=report.labels,
        loc_measures=report.loc_measures,
        band=report.band,
        tolerances=report.tolerances,
        window=window,
        boundary=boundary,
    )
