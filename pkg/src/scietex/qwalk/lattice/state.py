"""
Walker state module.

A state is a two-component complex amplitude field over a lattice window, stored densely as an
array of shape ``(N, 2)``: row `k` holds `(psi0(x), psi1(x))` for site `x = lo + k`. Component 0
moves left under the shift, component 1 moves right. Amplitudes outside the window are zero.

The flat vector form used by matrix code orders the basis lexicographically by site, then by
component: index ``2 * (x - lo) + c``.

Classes:
    - State: Immutable amplitude field with norms, embeddings and constructors.
"""

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np
from numpy.typing import NDArray, ArrayLike

from ..base.errors import WindowMismatch, WindowTooSmall
from .window import Window


def _spinor(values: ArrayLike) -> NDArray[np.complex128]:
    spinor = np.asarray(values, dtype=np.complex128).reshape(-1)
    if spinor.shape != (2,):
        raise ValueError(f"Spinor must have two components, got {spinor.shape[0]}")
    return spinor


# pylint: disable=too-many-public-methods
@dataclass(frozen=True, eq=False)
class State:
    """
    Two-component amplitude field on a window.

    Attributes:
        window (Window): Sites carrying amplitudes.
        amp (NDArray[np.complex128]): Read-only array of shape ``(window.size, 2)``.

    Raises:
        ValueError: If the array shape does not match the window or an amplitude is not finite.
    """

    window: Window
    amp: NDArray[np.complex128]

    def __post_init__(self) -> None:
        amp = np.array(self.amp, dtype=np.complex128)
        if amp.shape != (self.window.size, 2):
            raise ValueError(
                f"Amplitude array shape {amp.shape} does not match window {self.window} "
                f"(expected {(self.window.size, 2)})"
            )
        if not np.all(np.isfinite(amp)):
            raise ValueError("State amplitudes must be finite")
        amp.flags.writeable = False
        object.__setattr__(self, "amp", amp)

    # Constructors

    @classmethod
    def zeros(cls, window: Window) -> "State":
        """Zero state on `window`."""
        return cls(window, np.zeros((window.size, 2), dtype=np.complex128))

    @classmethod
    def delta(cls, window: Window, site: int, spinor: ArrayLike = (1.0, 0.0)) -> "State":
        """State equal to `spinor` at `site` and zero elsewhere."""
        return cls.uniform_on_set(window, [site], spinor)

    @classmethod
    def uniform_on_set(cls, window: Window, sites: Iterable[int], spinor: ArrayLike) -> "State":
        """State equal to the same `spinor` on every site of `sites`."""
        amp = np.zeros((window.size, 2), dtype=np.complex128)
        value = _spinor(spinor)
        for x in sites:
            amp[window.index(int(x))] = value
        return cls(window, amp)

    @classmethod
    def from_mapping(
        cls, amplitudes: Mapping[int, Sequence[complex]], window: Window | None = None
    ) -> "State":
        """
        State from a ``{site: (a0, a1)}`` mapping.

        Args:
            amplitudes (Mapping[int, Sequence[complex]]): Non-zero amplitudes by site.
            window (Optional[Window]): Target window; defaults to the smallest window covering
                the mapping.

        Returns:
            State: The assembled state.
        """
        if window is None:
            window = Window.covering(amplitudes.keys())
        amp = np.zeros((window.size, 2), dtype=np.complex128)
        for x, value in amplitudes.items():
            amp[window.index(int(x))] = _spinor(value)
        return cls(window, amp)

    @classmethod
    def from_vector(cls, window: Window, vector: ArrayLike) -> "State":
        """State from a flat vector in (site, component) order."""
        vec = np.asarray(vector, dtype=np.complex128).reshape(-1)
        if vec.shape[0] != 2 * window.size:
            raise WindowMismatch(
                f"Vector of length {vec.shape[0]} does not fit window {window} "
                f"(expected {2 * window.size})"
            )
        return cls(window, vec.reshape(window.size, 2))

    # Views

    def vector(self) -> NDArray[np.complex128]:
        """Flat copy in (site, component) order, length ``2 * window.size``."""
        return self.amp.reshape(-1).copy()

    def at(self, x: int) -> NDArray[np.complex128]:
        """Spinor at site `x` (zero outside the window)."""
        if x in self.window:
            return self.amp[self.window.index(x)].copy()
        return np.zeros(2, dtype=np.complex128)

    def probabilities(self) -> NDArray[np.float64]:
        """Per-site probabilities |a0(x)|^2 + |a1(x)|^2 over the window."""
        return np.sum(np.abs(self.amp) ** 2, axis=1)

    def norm_squared(self) -> float:
        """Squared l2 norm."""
        return float(np.sum(self.probabilities()))

    def norm(self) -> float:
        """l2 norm."""
        return float(np.sqrt(self.norm_squared()))

    def normalized(self) -> "State":
        """Copy scaled to unit norm."""
        nrm = self.norm()
        if nrm == 0.0:
            raise ValueError("Cannot normalize the zero state")
        return State(self.window, self.amp / nrm)

    def support(self, tol: float = 0.0) -> Window | None:
        """
        Smallest window containing every site with an amplitude above `tol`.

        A single-site support is widened to two sites. Returns None for the zero state.
        """
        mask = np.any(np.abs(self.amp) > tol, axis=1)
        if not np.any(mask):
            return None
        idx = np.flatnonzero(mask)
        return Window.covering([self.window.lo + idx[0], self.window.lo + idx[-1]])

    # Window changes

    def embedded(self, window: Window) -> "State":
        """Zero-padded copy on a larger window."""
        if self.window not in window:
            raise WindowTooSmall(f"Window {window} does not contain state window {self.window}")
        amp = np.zeros((window.size, 2), dtype=np.complex128)
        start = self.window.lo - window.lo
        amp[start : start + self.window.size] = self.amp
        return State(window, amp)

    def restricted(self, window: Window) -> "State":
        """Copy cut (or zero-padded) to `window`; amplitudes outside it are dropped."""
        amp = np.zeros((window.size, 2), dtype=np.complex128)
        lo, hi = max(window.lo, self.window.lo), min(window.hi, self.window.hi)
        if lo <= hi:
            amp[lo - window.lo : hi - window.lo + 1] = self.amp[
                lo - self.window.lo : hi - self.window.lo + 1
            ]
        return State(window, amp)

    def shifted(self, y: int) -> "State":
        """Copy translated by `y` sites together with its window."""
        return State(self.window.shifted(y), self.amp)

    # Algebra over the union of windows

    def _aligned(self, other: "State") -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
        window = self.window.union(other.window)
        return self.restricted(window).amp, other.restricted(window).amp

    def inner(self, other: "State") -> complex:
        """Inner product <self, other>, antilinear in `self`."""
        left, right = self._aligned(other)
        return complex(np.vdot(left, right))

    def distance(self, other: "State") -> float:
        """l2 norm of the difference of two states."""
        left, right = self._aligned(other)
        return float(np.linalg.norm((left - right).reshape(-1)))

    def scaled(self, factor: complex) -> "State":
        """Copy multiplied by a scalar."""
        return State(self.window, self.amp * factor)

    def __add__(self, other: "State") -> "State":
        window = self.window.union(other.window)
        left, right = self._aligned(other)
        return State(window, left + right)

    def __repr__(self) -> str:
        return f"State(window={self.window}, norm={self.norm():.6g})"
