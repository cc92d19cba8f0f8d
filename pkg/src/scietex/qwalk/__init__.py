"""
Quantum Walk Package.

This package simulates one-dimensional, two-state, position-dependent discrete-time quantum
walks `U = SC` on the integer lattice and detects edge defects (pairs of sites carrying a
perfectly reflecting anti-diagonal coin) from the eigenvalues of `U` that are embedded in the
interior of its essential spectrum.

Subpackages:
    base: Error hierarchy, phase arithmetic on the torus and string-backed enumerations.
    lattice: Windows, states, coin matrices and coin fields; the exact time step of the walk.
    symbol: Fourier symbol of the homogeneous walk, dispersion relation, essential-spectrum
        bands, thresholds, level sets and quasi-modes.
    spectra: Finite truncations of `U`, their eigendecomposition and the classification of
        eigenvalues against the analytic bands.
    defects: Exact compactly supported eigenfunctions of edge defects, compact kernels of
        `U - lambda` and the defect verdict.
    cli: Experiment configuration, subcommands of the `qws` command and result files.
"""

from .version import __version__
