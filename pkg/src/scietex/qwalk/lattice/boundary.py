"""
Boundary mode enumeration.

Classes:
    - Boundary: How the time step treats amplitudes that leave the window.
"""

from ..base.choice import ChoiceEnum


class Boundary(ChoiceEnum):
    """
    Boundary modes of the finite lattice window.

    Members:
        PADDED: The window grows by one site on each side per step, so finite-time evolution
            equals the evolution on the full lattice.
        PERIODIC: The shift wraps modulo the window size (the walk lives on a ring).
        TRUNCATE: Amplitudes leaving the window are dropped (finite-rank truncation, not
            unitary).
    """

    PADDED = "padded"
    PERIODIC = "periodic"
    TRUNCATE = "truncate"
