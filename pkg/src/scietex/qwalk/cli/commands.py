"""
Subcommand runner.

Each subcommand reads an `ExperimentConfig`, runs the corresponding library pipeline and writes
its artifacts to ``config.output.dir``:

========================  ===================================================================
subcommand                files
========================  ===================================================================
``simulate``              ``distribution_tNNNN.csv`` per step, ``distribution.svg`` (final
                          time), ``simulate.json`` (norms and central mass per step)
``spectrum``              ``spectrum.csv``, ``spectrum.svg``, ``spectrum.json`` (label counts)
``bands``                 ``bands.json``
``dispersion``            ``dispersion.csv`` (``xi, theta, abs_p`` on a grid)
``eigenfunction``         ``eigenfunction.csv``, ``eigenfunction.json`` (eigenvalue, residual)
``detect``                ``detect.json``
========================  ===================================================================

Classes:
    - Subcommand: Subcommand names.
    - CommandResult: Exit status, written files and a summary.

Functions:
    - run_subcommand: Run a subcommand for a configuration.
"""

import logging
from logging import Logger
from pathlib import Path
from typing import Any, Callable, NamedTuple, Optional

import numpy as np

from ..base.choice import ChoiceEnum
from ..defects.detect import detect_edge_defects
from ..defects.eigenfunction import build_defect_eigenfunction, verify_eigenpair
from ..lattice.boundary import Boundary
from ..lattice.evolution import evolve, position_distribution
from ..spectra.classify import spectrum_of
from ..symbol.bands import essential_band
from ..symbol.dispersion import dispersion
from .config import ExperimentConfig, OutputFormat
from .plots import distribution_svg, spectrum_svg
from .serialization import (
    SPECTRUM_HEADER,
    STATE_HEADER,
    atomic_write,
    build_metadata,
    csv_text,
    json_text,
    state_rows,
)

_LOGGER = logging.getLogger(__name__)

CENTRAL_RADIUS: int = 5


class Subcommand(ChoiceEnum):
    """Subcommands of the ``qws`` tool."""

    SIMULATE = "simulate"
    SPECTRUM = "spectrum"
    BANDS = "bands"
    DISPERSION = "dispersion"
    EIGENFUNCTION = "eigenfunction"
    DETECT = "detect"


class CommandResult(NamedTuple):
    """Exit status, written files and a JSON-ready summary of a subcommand."""

    status: int
    files: tuple[Path, ...]
    summary: dict[str, Any]


class _Writer:
    """Writes the artifacts of one run, honoring the configured formats."""

    def __init__(self, config: ExperimentConfig, subcommand: Subcommand, **extra: Any) -> None:
        self.config = config
        self.directory = Path(config.output.dir)
        self.metadata = build_metadata(
            config.config_hash(),
            subcommand.value,
            tolerances={
                "classify": config.tolerances.classify.model_dump(mode="json"),
                "detect": config.tolerances.detect_config().model_dump(mode="json"),
            },
            **extra,
        )
        self.files: list[Path] = []

    def write(self, fmt: OutputFormat, name: str, render: Callable[[dict[str, Any]], str]) -> None:
        if not self.config.output.wants(fmt):
            return
        self.files.append(atomic_write(self.directory / name, render(self.metadata)))

    def result(self, summary: dict[str, Any]) -> CommandResult:
        return CommandResult(0, tuple(self.files), summary)


def _simulate(config: ExperimentConfig, log: Logger) -> CommandResult:
    boundary = config.boundary_or(Boundary.PADDED)
    window = config.window.window
    psi0 = config.initial_state.build(window)
    if boundary == Boundary.PADDED:
        support = psi0.support()
        if support is not None:
            psi0 = psi0.restricted(support)
        field_window = window.union(psi0.window.expanded(config.steps))
    else:
        field_window = window
    field = config.coin_field(field_window)
    trajectory = evolve(psi0, field, config.steps, boundary, logger=log)

    writer = _Writer(config, Subcommand.SIMULATE, boundary=boundary.value)
    norms = []
    central = []
    for t, state in enumerate(trajectory):
        norms.append(state.norm_squared())
        dist = position_distribution(state)
        central.append(sum(p for x, p in dist.items() if abs(x) <= CENTRAL_RADIUS))
        writer.write(
            OutputFormat.CSV,
            f"distribution_t{t:04d}.csv",
            lambda meta, s=state, t=t: csv_text(STATE_HEADER, state_rows(s), {**meta, "t": t}),
        )
    final = position_distribution(trajectory[-1])
    writer.write(
        OutputFormat.SVG,
        "distribution.svg",
        lambda meta: distribution_svg(final, f"P(X_t = x), t = {config.steps}", meta),
    )
    summary = {
        "steps": config.steps,
        "total_probability": norms,
        "central_mass": central,
        "central_radius": CENTRAL_RADIUS,
    }
    writer.write(OutputFormat.JSON, "simulate.json", lambda meta: json_text(summary, meta))
    return writer.result({"steps": config.steps, "final_total_probability": norms[-1]})


def _spectrum(config: ExperimentConfig, log: Logger) -> CommandResult:
    boundary = config.boundary_or(Boundary.PERIODIC)
    field = config.coin_field()
    report = spectrum_of(field, boundary, config.tolerances.classify, logger=log)
    writer = _Writer(
        config,
        Subcommand.SPECTRUM,
        boundary=boundary.value,
        resolved_tolerances=report.tolerances.model_dump(mode="json"),
    )
    rows = [[row[key] for key in SPECTRUM_HEADER] for row in report.rows()]
    writer.write(
        OutputFormat.CSV, "spectrum.csv", lambda meta: csv_text(SPECTRUM_HEADER, rows, meta)
    )
    writer.write(
        OutputFormat.SVG,
        "spectrum.svg",
        lambda meta: spectrum_svg(report, f"{boundary.value} truncation on {field.window}", meta),
    )
    summary = {"dimension": len(report), "counts": report.counts(), "band": report.band.to_dict()}
    writer.write(OutputFormat.JSON, "spectrum.json", lambda meta: json_text(summary, meta))
    return writer.result(summary)


def _bands(config: ExperimentConfig, log: Logger) -> CommandResult:
    band = essential_band(config.model)
    log.info("Bands: %s", band.to_dict())
    writer = _Writer(config, Subcommand.BANDS)
    writer.write(OutputFormat.JSON, "bands.json", lambda meta: json_text(band.to_dict(), meta))
    return writer.result(band.to_dict())


def _dispersion(config: ExperimentConfig, log: Logger) -> CommandResult:
    grid = config.dispersion
    xi = 2.0 * np.pi * np.arange(grid.n_xi) / grid.n_xi
    theta = 2.0 * np.pi * np.arange(grid.n_theta) / grid.n_theta
    values = np.abs(dispersion(xi[:, None], theta[None, :], config.model))
    log.info("Dispersion on a %d x %d grid", grid.n_xi, grid.n_theta)
    rows = [
        [float(xi[i]), float(theta[j]), float(values[i, j])]
        for i in range(grid.n_xi)
        for j in range(grid.n_theta)
    ]
    writer = _Writer(config, Subcommand.DISPERSION)
    writer.write(
        OutputFormat.CSV,
        "dispersion.csv",
        lambda meta: csv_text(("xi", "theta", "abs_p"), rows, meta),
    )
    return writer.result({"n_xi": grid.n_xi, "n_theta": grid.n_theta})


def _eigenfunction(config: ExperimentConfig, log: Logger) -> CommandResult:
    settings = config.eigenfunction
    eigen = build_defect_eigenfunction(
        config.defect_spec(), settings.coefficients(), settings.sign
    )
    field = config.coin_field()
    residual = verify_eigenpair(field, eigen.eigenvalue, eigen.state)
    log.info("Defect eigenfunction residual %.3e", residual)
    summary = {
        "sign": eigen.sign.value,
        "eigenvalue": [eigen.eigenvalue.real, eigen.eigenvalue.imag],
        "kappas": [[k.real, k.imag] for k in eigen.kappas],
        "residual": residual,
    }
    writer = _Writer(config, Subcommand.EIGENFUNCTION)
    writer.write(
        OutputFormat.CSV,
        "eigenfunction.csv",
        lambda meta: csv_text(STATE_HEADER, state_rows(eigen.state), meta),
    )
    writer.write(OutputFormat.JSON, "eigenfunction.json", lambda meta: json_text(summary, meta))
    return writer.result(summary)


def _detect(config: ExperimentConfig, log: Logger) -> CommandResult:
    field = config.coin_field()
    report = detect_edge_defects(field, config.tolerances.detect_config(), logger=log)
    writer = _Writer(config, Subcommand.DETECT)
    writer.write(OutputFormat.JSON, "detect.json", lambda meta: json_text(report.to_dict(), meta))
    return writer.result(report.to_dict())


_RUNNERS: dict[Subcommand, Callable[[ExperimentConfig, Logger], CommandResult]] = {
    Subcommand.SIMULATE: _simulate,
    Subcommand.SPECTRUM: _spectrum,
    Subcommand.BANDS: _bands,
    Subcommand.DISPERSION: _dispersion,
    Subcommand.EIGENFUNCTION: _eigenfunction,
    Subcommand.DETECT: _detect,
}


def run_subcommand(
    name: Subcommand | str, config: ExperimentConfig, logger: Optional[Logger] = None
) -> CommandResult:
    """
    Run a subcommand and write its artifacts.

    Args:
        name (Subcommand | str): Subcommand name.
        config (ExperimentConfig): Validated configuration.
        logger (Optional[Logger], optional): Logger for progress messages.

    Returns:
        CommandResult: Status 0, the written files and a summary. The ``detect`` verdict is
        part of the summary, never of the status.

    Raises:
        ValueError: If the subcommand name is unknown.
        QuantumWalkError: Any library error raised by the pipeline.
    """
    log = logger if logger is not None else _LOGGER
    subcommand = Subcommand.from_string(str(name))
    log.info("Running %s (config %s)", subcommand.value, config.config_hash()[:12])
    return _RUNNERS[subcommand](config, log)  # type: ignore[index]
