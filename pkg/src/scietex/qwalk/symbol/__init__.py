"""
Symbol Analysis Subpackage.

This subpackage studies the homogeneous walk through its Fourier symbol: the dispersion
determinant, the essential-spectrum bands and thresholds, the level sets of the dispersion and
windowed plane waves certifying that a phase belongs to the essential spectrum.

Classes:
    BandStructure: Band arcs, thresholds and their multiplicities.
    FermiKind: Regular or singular level-set point.
    FermiPoint: A momentum on a level set.
    FermiSet: Level set of the dispersion at a spectral phase.
    QuasiMode: Windowed plane wave with phase and residual.

Modules:
    dispersion: Symbol matrix, eigen-data and dispersion.
    bands: Bands, thresholds and level sets.
    quasi_mode: Windowed plane waves.
"""

from .dispersion import (
    symbol_matrix,
    symbol_eigenvalues,
    symbol_eigenvector,
    dispersion,
    dispersion_derivative,
)
from .bands import (
    THRESHOLD_TOL,
    REGULAR_TOL,
    BandStructure,
    FermiKind,
    FermiPoint,
    FermiSet,
    essential_band,
    thresholds,
    fermi_set,
)
from .quasi_mode import MIN_WIDTH, QuasiMode, quasi_mode

__all__ = [
    "symbol_matrix",
    "symbol_eigenvalues",
    "symbol_eigenvector",
    "dispersion",
    "dispersion_derivative",
    "THRESHOLD_TOL",
    "REGULAR_TOL",
    "BandStructure",
    "FermiKind",
    "FermiPoint",
    "FermiSet",
    "essential_band",
    "thresholds",
    "fermi_set",
    "MIN_WIDTH",
    "QuasiMode",
    "quasi_mode",
]
