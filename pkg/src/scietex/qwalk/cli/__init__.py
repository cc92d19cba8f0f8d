"""
Command Line Subpackage.

This subpackage parses experiment configurations, runs the experiments behind the ``qws``
subcommands and serializes their results reproducibly (CSV, JSON and SVG with embedded run
metadata).

Classes:
    ExperimentConfig: Validated experiment configuration and its sections.
    Scenario: Built-in reference scenarios.
    Subcommand: Subcommand names.
    CommandResult: Result of a subcommand.

Modules:
    config: Configuration models and parsing.
    scenarios: Reference scenarios.
    serialization: CSV/JSON rendering and atomic writes.
    plots: SVG figures.
    commands: Subcommand runner.
    main: ``qws`` entry point.
"""

from .config import (
    InitialStateKind,
    OutputFormat,
    WindowConfig,
    InitialStateConfig,
    ToleranceConfig,
    OutputConfig,
    DispersionConfig,
    EigenfunctionConfig,
    ExperimentConfig,
    parse_config,
    apply_overrides,
)
from .scenarios import Scenario, scenario_config
from .commands import Subcommand, CommandResult, run_subcommand
from .main import main

__all__ = [
    "InitialStateKind",
    "OutputFormat",
    "WindowConfig",
    "InitialStateConfig",
    "ToleranceConfig",
    "OutputConfig",
    "DispersionConfig",
    "EigenfunctionConfig",
    "ExperimentConfig",
    "parse_config",
    "apply_overrides",
    "Scenario",
    "scenario_config",
    "Subcommand",
    "CommandResult",
    "run_subcommand",
    "main",
]
