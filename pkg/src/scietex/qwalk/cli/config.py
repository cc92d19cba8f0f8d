"""
Experiment configuration module.

An experiment is described by a JSON document validated into `ExperimentConfig`. Unknown keys
are rejected, every section has defaults, so ``{}`` is a valid configuration (Hadamard bulk, no
defects, window ``[-60, 60]``, 100 steps). Complex numbers are written as ``[re, im]`` pairs.

The canonical serialization (`ExperimentConfig.to_json`) lists fields in declaration order with
two-space indentation; parsing it back reproduces it byte for byte. Its SHA-256 digest
identifies the configuration in output metadata.

Classes:
    - InitialStateKind: How the initial state is specified.
    - OutputFormat: Output file formats.
    - WindowConfig, InitialStateConfig, ToleranceConfig, OutputConfig, DispersionConfig,
      EigenfunctionConfig: Configuration sections.
    - ExperimentConfig: The complete configuration.

Functions:
    - parse_config: Validate a JSON document.
    - apply_overrides: Re-validate a configuration with command line overrides.
"""

import hashlib
import json
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..base.choice import ChoiceEnum
from ..base.errors import RangeError, SchemaError, WindowTooSmall
from ..defects.detect import DetectConfig
from ..defects.eigenfunction import Sign
from ..lattice.boundary import Boundary
from ..lattice.field import CoinField, assemble_coin_field
from ..lattice.params import DefectSpec, ModelParams, PerturbationSpec, SiteOverride
from ..lattice.state import State
from ..lattice.window import Window
from ..spectra.classify import ClassifyTolerances

DEFAULT_L: int = 60
DEFAULT_STEPS: int = 100

ComplexPair = tuple[float, float]

_RANGE_ERROR_TYPES = frozenset(
    {
        "greater_than",
        "greater_than_equal",
        "less_than",
        "less_than_equal",
        "finite_number",
    }
)


def _complex(pair: ComplexPair) -> complex:
    return complex(pair[0], pair[1])


class InitialStateKind(ChoiceEnum):
    """
    Initial state specifications.

    Members:
        SITE_DELTA: `spinor` on the single site `site`.
        UNIFORM_ON_SET: The same `spinor` on every site of `sites`.
        CUSTOM: Explicit `amplitudes` by site.
    """

    SITE_DELTA = "site_delta"
    UNIFORM_ON_SET = "uniform_on_set"
    CUSTOM = "custom"


class OutputFormat(ChoiceEnum):
    """Output file formats."""

    CSV = "csv"
    JSON = "json"
    SVG = "svg"


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class WindowConfig(_Section):
    """Lattice window ``[-L, L]``."""

    L: int = Field(default=DEFAULT_L, ge=1)  # pylint: disable=invalid-name

    @property
    def window(self) -> Window:
        """The window ``[-L, L]``."""
        return Window.centered(self.L)


class InitialStateConfig(_Section):
    """
    Initial state of the evolution.

    Attributes:
        kind (InitialStateKind): Specification kind. Defaults to ``site_delta``.
        site (int): Site of ``site_delta``.
        sites (tuple[int, ...]): Sites of ``uniform_on_set``.
        spinor (tuple[ComplexPair, ComplexPair]): Spinor of ``site_delta``/``uniform_on_set``.
        amplitudes (dict[int, tuple[ComplexPair, ComplexPair]]): Spinors of ``custom``.
        normalize (bool): Scale the state to unit norm. Defaults to False.
    """

    kind: InitialStateKind = InitialStateKind.SITE_DELTA
    site: int = 0
    sites: tuple[int, ...] = (0,)
    spinor: tuple[ComplexPair, ComplexPair] = ((1.0, 0.0), (0.0, 0.0))
    amplitudes: dict[int, tuple[ComplexPair, ComplexPair]] = Field(default_factory=dict)
    normalize: bool = False

    def sites_used(self) -> list[int]:
        """Sites carrying amplitudes."""
        if self.kind == InitialStateKind.SITE_DELTA:
            return [self.site]
        if self.kind == InitialStateKind.UNIFORM_ON_SET:
            return list(self.sites)
        return sorted(self.amplitudes)

    def build(self, window: Window) -> State:
        """
        Initial state on `window`.

        Raises:
            WindowTooSmall: If a site lies outside `window` or no site is given.
            SchemaError: If `normalize` is set and every amplitude is zero.
        """
        if not self.sites_used():
            raise WindowTooSmall("Initial state has no sites")
        spinor = [_complex(c) for c in self.spinor]
        if self.kind == InitialStateKind.CUSTOM:
            values = {x: [_complex(c) for c in pair] for x, pair in self.amplitudes.items()}
            state = State.from_mapping(values, window)
        else:
            state = State.uniform_on_set(window, self.sites_used(), spinor)
        if not self.normalize:
            return state
        if state.norm() == 0.0:
            key = "amplitudes" if self.kind == InitialStateKind.CUSTOM else "spinor"
            raise SchemaError(
                "Initial state is zero and cannot be normalized", path=f"initial_state.{key}"
            )
        return state.normalized()


class ToleranceConfig(_Section):
    """
    Classification and detection settings.

    `classify` applies to the ``spectrum`` subcommand. The spectral localization method of
    ``detect`` classifies with ``detect.tolerances`` when it differs from the defaults, and with
    `classify` otherwise.

    Attributes:
        classify (ClassifyTolerances): Eigenvalue classification tolerances.
        detect (DetectConfig): Edge-defect detection settings.
    """

    classify: ClassifyTolerances = Field(default_factory=ClassifyTolerances)
    detect: DetectConfig = Field(default_factory=DetectConfig)

    def detect_config(self) -> DetectConfig:
        """Detection settings with the classification tolerances resolved."""
        if self.detect.tolerances != ClassifyTolerances():
            return self.detect
        return self.detect.model_copy(update={"tolerances": self.classify})


class OutputConfig(_Section):
    """Output directory and formats."""

    dir: str = "out"
    formats: tuple[OutputFormat, ...] = (OutputFormat.CSV, OutputFormat.JSON, OutputFormat.SVG)

    def wants(self, fmt: OutputFormat) -> bool:
        """Whether files of format `fmt` are written."""
        return fmt in self.formats


class DispersionConfig(_Section):
    """Grid of the ``dispersion`` subcommand."""

    n_xi: int = Field(default=100, ge=2)
    n_theta: int = Field(default=100, ge=2)


class EigenfunctionConfig(_Section):
    """Parameters of the ``eigenfunction`` subcommand; `kappas` default to ``1/sqrt(N)``."""

    sign: Sign = Sign.PLUS
    kappas: Optional[tuple[ComplexPair, ...]] = None

    def coefficients(self) -> Optional[list[complex]]:
        """Coefficients as complex numbers, or None for the default."""
        if self.kappas is None:
            return None
        return [_complex(k) for k in self.kappas]


class ExperimentConfig(_Section):
    """
    Complete experiment configuration.

    Attributes:
        model (ModelParams): Bulk coin parameters.
        defects (Optional[DefectSpec]): Edge defects.
        perturbation (PerturbationSpec): Bulk perturbation.
        site_overrides (tuple[SiteOverride, ...]): Explicit site coins.
        window (WindowConfig): Lattice window.
        boundary (Optional[Boundary]): Boundary mode; None selects ``periodic`` for spectral
            subcommands and ``padded`` for evolution.
        initial_state (InitialStateConfig): Initial state.
        steps (int): Number of evolution steps.
        tolerances (ToleranceConfig): Classification and detection settings.
        output (OutputConfig): Output directory and formats.
        dispersion (DispersionConfig): Dispersion grid.
        eigenfunction (EigenfunctionConfig): Defect eigenfunction parameters.
    """

    model: ModelParams = Field(default_factory=ModelParams)
    defects: Optional[DefectSpec] = None
    perturbation: PerturbationSpec = Field(default_factory=PerturbationSpec)
    site_overrides: tuple[SiteOverride, ...] = ()
    window: WindowConfig = Field(default_factory=WindowConfig)
    boundary: Optional[Boundary] = None
    initial_state: InitialStateConfig = Field(default_factory=InitialStateConfig)
    steps: int = Field(default=DEFAULT_STEPS, ge=0)
    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    dispersion: DispersionConfig = Field(default_factory=DispersionConfig)
    eigenfunction: EigenfunctionConfig = Field(default_factory=EigenfunctionConfig)

    def boundary_or(self, default: Boundary) -> Boundary:
        """Configured boundary, or `default` when none is set."""
        return self.boundary if self.boundary is not None else default

    def defect_spec(self) -> DefectSpec:
        """Configured defects, empty when none are set."""
        return self.defects if self.defects is not None else DefectSpec()

    def coin_field(self, window: Optional[Window] = None) -> CoinField:
        """Coin field of the configuration on `window` (default ``[-L, L]``)."""
        return assemble_coin_field(
            self.model,
            self.defects,
            self.perturbation,
            window if window is not None else self.window.window,
            self.site_overrides,
        )

    def to_json(self) -> str:
        """Canonical JSON text (declaration order, two-space indent, trailing newline)."""
        return json.dumps(self.model_dump(mode="json"), indent=2) + "\n"

    def config_hash(self) -> str:
        """SHA-256 hex digest of the canonical JSON text."""
        return hashlib.sha256(self.to_json().encode("utf-8")).hexdigest()


def _validation_error(exc: ValidationError) -> SchemaError | RangeError:
    first = exc.errors()[0]
    path = ".".join(str(part) for part in first["loc"]) or None
    message = first["msg"]
    if first["type"] in _RANGE_ERROR_TYPES:
        return RangeError(message, path=path)
    return SchemaError(message, path=path)


def _validate(data: Any) -> ExperimentConfig:
    if not isinstance(data, dict):
        raise SchemaError("configuration must be a JSON object")
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as exc:
        raise _validation_error(exc) from exc


def parse_config(text: str) -> ExperimentConfig:
    """
    Parse and validate a JSON configuration document.

    Args:
        text (str): JSON text.

    Returns:
        ExperimentConfig: Validated configuration with defaults applied.

    Raises:
        SchemaError: If the text is not JSON or does not match the schema (with field path).
        RangeError: If a numeric value is out of range (with field path).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} (line {exc.lineno})") from exc
    return _validate(data)


def apply_overrides(config: ExperimentConfig, **overrides: Any) -> ExperimentConfig:
    """
    Configuration with command line overrides, validated again.

    Keyword arguments with value None are ignored. Recognized keys: ``seed``
    (``perturbation.seed``), ``window`` (``window.L``), ``boundary`` and ``out``
    (``output.dir``).

    Raises:
        SchemaError: For an unknown override key or an invalid value.
        RangeError: For an out-of-range value.
    """
    paths = {
        "seed": ("perturbation", "seed"),
        "window": ("window", "L"),
        "boundary": ("boundary",),
        "out": ("output", "dir"),
    }
    data = config.model_dump(mode="json")
    for key, value in overrides.items():
        if value is None:
            continue
        if key not in paths:
            raise SchemaError(f"unknown override {key!r}")
        *parents, leaf = paths[key]
        target = data
        for parent in parents:
            target = target[parent]
        target[leaf] = value
    return _validate(data)
