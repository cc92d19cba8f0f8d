"""
Lattice window module.

A window is a finite, inclusive range of integer lattice sites `lo..hi` on which amplitudes and
coins are stored densely. Windows are the finite stand-in for the full lattice Z.

Classes:
    - Window: Inclusive site range with containment and index helpers.
"""

from dataclasses import dataclass
from typing import Iterable

import numpy as np
from numpy.typing import NDArray

from ..base.errors import WindowTooSmall


@dataclass(frozen=True)
class Window:
    """
    Inclusive range of lattice sites.

    Attributes:
        lo (int): First site.
        hi (int): Last site (inclusive).

    Raises:
        WindowTooSmall: If ``hi - lo + 1 < 2``.
    """

    lo: int
    hi: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", int(self.lo))
        object.__setattr__(self, "hi", int(self.hi))
        if self.hi - self.lo + 1 < 2:
            raise WindowTooSmall(
                f"Window [{self.lo}, {self.hi}] must contain at least 2 sites"
            )

    @classmethod
    def centered(cls, half_width: int) -> "Window":
        """Window ``[-half_width, half_width]``."""
        return cls(-int(half_width), int(half_width))

    @classmethod
    def covering(cls, sites: Iterable[int], margin: int = 0) -> "Window":
        """
        Smallest window containing all `sites`, widened by `margin` on each side.

        A single site with zero margin is widened to two sites.
        """
        values = [int(x) for x in sites]
        if not values:
            raise WindowTooSmall("Cannot build a window around an empty site set")
        lo, hi = min(values) - margin, max(values) + margin
        if hi == lo:
            hi += 1
        return cls(lo, hi)

    @property
    def size(self) -> int:
        """Number of sites N = hi - lo + 1."""
        return self.hi - self.lo + 1

    @property
    def sites(self) -> NDArray[np.int64]:
        """Array of the sites of the window in increasing order."""
        return np.arange(self.lo, self.hi + 1, dtype=np.int64)

    def index(self, x: int) -> int:
        """Position of site `x` inside the window arrays."""
        if not self.lo <= x <= self.hi:
            raise WindowTooSmall(f"Site {x} is outside window [{self.lo}, {self.hi}]")
        return int(x - self.lo)

    def __contains__(self, x: object) -> bool:
        if isinstance(x, Window):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, (int, np.integer)):
            return self.lo <= int(x) <= self.hi
        return False

    def contains_interior(self, x: int, margin: int = 1) -> bool:
        """Whether site `x` lies at least `margin` sites away from both ends."""
        return self.lo + margin <= x <= self.hi - margin

    def expanded(self, n: int) -> "Window":
        """Window grown by `n` sites on each side (shrunk for negative `n`)."""
        return Window(self.lo - n, self.hi + n)

    def shifted(self, y: int) -> "Window":
        """Window translated by `y` sites."""
        return Window(self.lo + y, self.hi + y)

    def union(self, other: "Window") -> "Window":
        """Smallest window containing both windows."""
        return Window(min(self.lo, other.lo), max(self.hi, other.hi))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"
