"""
Base Quantum Walk Subpackage.

This subpackage provides the building blocks shared by every other subpackage: the error
hierarchy, arithmetic of phases on the torus and the string-backed enumeration base class used
for every configurable option.

Classes:
    ChoiceEnum: Base enumeration with a strict `from_string` constructor.
    QuantumWalkError: Root of the error hierarchy, plus the concrete error classes.

Modules:
    errors: Error hierarchy.
    phase: Phase reduction, circular distances and arcs.
    choice: The `ChoiceEnum` base class.
    concurrency: Worker pool sizing from the environment.
"""

from .choice import ChoiceEnum
from .errors import (
    QuantumWalkError,
    WindowTooSmall,
    WindowMismatch,
    EnvelopeViolation,
    UnsupportedParameter,
    ConvergenceFailure,
    AllZeroCoefficients,
    SchemaError,
    RangeError,
)
from .phase import (
    TWO_PI,
    reduce_phase,
    circular_distance,
    arc_length,
    in_arc,
    distance_to_arc,
)
from .concurrency import THREADS_ENV, worker_count

__all__ = [
    "THREADS_ENV",
    "worker_count",
    "ChoiceEnum",
    "QuantumWalkError",
    "WindowTooSmall",
    "WindowMismatch",
    "EnvelopeViolation",
    "UnsupportedParameter",
    "ConvergenceFailure",
    "AllZeroCoefficients",
    "SchemaError",
    "RangeError",
    "TWO_PI",
    "reduce_phase",
    "circular_distance",
    "arc_length",
    "in_arc",
    "distance_to_arc",
]
