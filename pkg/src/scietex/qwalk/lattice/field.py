"""
Coin field module.

A coin field assigns a unitary 2x2 coin to every site of a window. Fields are normally
assembled from a recipe: the bulk coin C0, edge defects carrying the reflecting coin C1, an
optional exponentially decaying random perturbation C2 of the bulk coin, and optional explicit
site overrides. The recipe is kept with the field so the same field can be rebuilt on a
larger window.

Perturbation generator
----------------------
Each site draws four uniform offsets in [-1, 1] from its own generator, seeded by
``(seed, zigzag(x))``, so a site's coin does not depend on the window. With
``s(x) = min(1, M exp(-rho <x>) / 4)`` the site parameters are

    eta(x)   = clip(arccos(p) + s u0, 0, arccos(delta))
    alpha(x) = alpha + s u1,  beta(x) = beta + s u2,  gamma(x) = gamma + s u3

and the coin is built with ``p(x) = cos eta(x)``, ``q(x) = sin eta(x)``. It is returned as C0 plus
its difference to the same construction at zero offsets, so a site whose offsets vanish in
floating point carries C0 exactly. Each entry moves by at most ``3 s(x)``, which keeps the coin
inside the envelope up to ``ROUNDING_FLOOR``, and ``|a(x)| >= delta``.

Classes:
    - FieldRecipe: Parameters a field was assembled from.
    - CoinField: Immutable per-site coins over a window.

Functions:
    - assemble_coin_field: Build a field from a recipe over a window.
    - perturbation_coins: Seeded perturbed bulk coins for a set of sites.
"""

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np
from numpy.typing import NDArray

from ..base.errors import EnvelopeViolation, UnsupportedParameter, WindowTooSmall
from .coin import CoinMatrix, coin_array, make_coin_c0, make_defect_coin, unitarity_defect
from .coin import UNITARY_TOL
from .params import DefectSpec, ModelParams, PerturbationKind, PerturbationSpec, SiteOverride
from .window import Window

ROUNDING_FLOOR = 8.0 * float(np.finfo(np.float64).eps)


def _zigzag(x: int) -> int:
    return 2 * x if x >= 0 else -2 * x - 1


def envelope(perturbation: PerturbationSpec, sites: NDArray[np.int64]) -> NDArray[np.float64]:
    """Envelope M exp(-rho <x>) evaluated on an array of sites."""
    x = np.asarray(sites, dtype=np.float64)
    return perturbation.M * np.exp(-perturbation.rho * np.sqrt(1.0 + x * x))


def perturbation_coins(
    params: ModelParams, perturbation: PerturbationSpec, sites: Iterable[int]
) -> NDArray[np.complex128]:
    """
    Seeded random perturbation of the bulk coin.

    Parameters
    ----------
    params : ModelParams
        Bulk parameters; `params.p` must be at least `perturbation.delta`.
    perturbation : PerturbationSpec
        Envelope, lower bound and seed.
    sites : Iterable[int]
        Sites to generate coins for.

    Returns
    -------
    NDArray[np.complex128]
        Array of shape ``(len(sites), 2, 2)``.

    Raises
    ------
    UnsupportedParameter
        If ``params.p < perturbation.delta``.
    """
    if params.p < perturbation.delta:
        raise UnsupportedParameter(
            f"Bulk p={params.p} is below the perturbation lower bound delta={perturbation.delta}"
        )
    site_arr = np.asarray(list(sites), dtype=np.int64)
    scale = np.minimum(1.0, envelope(perturbation, site_arr) / 4.0)
    offsets = np.empty((site_arr.size, 4), dtype=np.float64)
    for k, x in enumerate(site_arr):
        rng = np.random.default_rng([perturbation.seed, _zigzag(int(x))])
        offsets[k] = rng.uniform(-1.0, 1.0, size=4)
    offsets *= scale[:, None]
    shifted = _offset_coins(params, perturbation, offsets)
    unshifted = _offset_coins(params, perturbation, np.zeros_like(offsets))
    return make_coin_c0(params).matrix + (shifted - unshifted)


def _offset_coins(
    params: ModelParams, perturbation: PerturbationSpec, offsets: NDArray[np.float64]
) -> NDArray[np.complex128]:
    eta = np.clip(np.arccos(params.p) + offsets[:, 0], 0.0, np.arccos(perturbation.delta))
    p = np.maximum(np.cos(eta), perturbation.delta)
    q = np.sin(eta)
    return coin_array(
        p,
        q,
        params.alpha + offsets[:, 1],
        params.beta + offsets[:, 2],
        params.gamma + offsets[:, 3],
    )


@dataclass(frozen=True)
class FieldRecipe:
    """
    Parameters a coin field was assembled from.

    Attributes:
        params (ModelParams): Bulk parameters.
        defects (DefectSpec): Edge defects (may be empty).
        perturbation (PerturbationSpec): Bulk perturbation.
        overrides (tuple[SiteOverride, ...]): Explicit site coins.
    """

    params: ModelParams
    defects: DefectSpec = field(default_factory=DefectSpec)
    perturbation: PerturbationSpec = field(default_factory=PerturbationSpec)
    overrides: tuple[SiteOverride, ...] = ()

    @property
    def fixed_sites(self) -> tuple[int, ...]:
        """Sites whose coin differs from the (perturbed) bulk by construction."""
        sites = set(self.defects.sites)
        for override in self.overrides:
            sites.update(override.sites)
        return tuple(sorted(sites))


@dataclass(frozen=True, eq=False)
class CoinField:
    """
    Per-site unitary coins over a window.

    Attributes:
        window (Window): Sites carrying coins.
        coins (NDArray[np.complex128]): Read-only array of shape ``(window.size, 2, 2)``.
        recipe (Optional[FieldRecipe]): Recipe the field was assembled from, if any.

    Raises:
        ValueError: If the coin array shape does not match the window, or a coin is not
            unitary within 1e-12.
    """

    window: Window
    coins: NDArray[np.complex128]
    recipe: Optional[FieldRecipe] = None

    def __post_init__(self) -> None:
        coins = np.array(self.coins, dtype=np.complex128)
        if coins.shape != (self.window.size, 2, 2):
            raise ValueError(
                f"Coin array shape {coins.shape} does not match window {self.window}"
            )
        defect = unitarity_defect(coins)
        if defect > UNITARY_TOL:
            raise ValueError(f"Coin field is not unitary (max |C*C - I| = {defect:.3e})")
        coins.flags.writeable = False
        object.__setattr__(self, "coins", coins)

    @classmethod
    def constant(cls, window: Window, coin: CoinMatrix) -> "CoinField":
        """Field with the same coin on every site."""
        return cls(window, np.broadcast_to(coin.matrix, (window.size, 2, 2)))

    def coin(self, x: int) -> CoinMatrix:
        """Coin at site `x`."""
        return CoinMatrix(self.coins[self.window.index(x)])

    def coins_on(self, window: Window) -> NDArray[np.complex128]:
        """Read-only slice of the coins on a sub-window."""
        if window not in self.window:
            raise WindowTooSmall(f"Field window {self.window} does not contain {window}")
        start = window.lo - self.window.lo
        return self.coins[start : start + window.size]

    def restricted(self, window: Window) -> "CoinField":
        """The same field on a sub-window."""
        return CoinField(window, self.coins_on(window), self.recipe)

    def resized(self, window: Window) -> "CoinField":
        """
        The same field on another window.

        Fields with a recipe are re-assembled; fields without one can only be restricted.
        """
        if self.recipe is None:
            return self.restricted(window)
        return assemble_coin_field(
            self.recipe.params,
            self.recipe.defects,
            self.recipe.perturbation,
            window,
            self.recipe.overrides,
        )

    def unitarity_defect(self) -> float:
        """Largest entry of |C(x)* C(x) - I| over the window."""
        return unitarity_defect(self.coins)

    def __repr__(self) -> str:
        return f"CoinField(window={self.window}, recipe={self.recipe!r})"


# pylint: disable=too-many-arguments,too-many-positional-arguments
def assemble_coin_field(
    params: ModelParams,
    defects: Optional[DefectSpec],
    perturbation: Optional[PerturbationSpec],
    window: Window,
    overrides: Iterable[SiteOverride] = (),
) -> CoinField:
    """
    Assemble a coin field: reflecting coins on defect sites, bulk (perturbed) coins elsewhere.

    Args:
        params (ModelParams): Bulk parameters.
        defects (Optional[DefectSpec]): Edge defects; None means no defects.
        perturbation (Optional[PerturbationSpec]): Bulk perturbation; None means kind none.
        window (Window): Sites of the field. Must contain every defect site with a margin of
            at least one site on each side.
        overrides (Iterable[SiteOverride], optional): Explicit coins on non-defect sites.

    Returns:
        CoinField: The assembled field, carrying its recipe.

    Raises:
        WindowTooSmall: If a defect site is not interior to the window, or an override site is
            outside it.
        UnsupportedParameter: If an override touches a defect site, or the perturbation lower
            bound exceeds the bulk p.
        EnvelopeViolation: If a generated coin breaks the envelope bound by more than
            ``ROUNDING_FLOOR``.
    """
    recipe = FieldRecipe(
        params=params,
        defects=defects if defects is not None else DefectSpec(),
        perturbation=perturbation if perturbation is not None else PerturbationSpec(),
        overrides=tuple(overrides),
    )
    defect_sites = recipe.defects.sites
    for x in defect_sites:
        if not window.contains_interior(x, margin=1):
            raise WindowTooSmall(
                f"Defect site {x} is not interior to window {window} (one-site margin needed)"
            )

    c0 = make_coin_c0(params)
    if recipe.perturbation.kind == PerturbationKind.EXPONENTIAL:
        coins = perturbation_coins(params, recipe.perturbation, window.sites)
        deviation = np.max(np.abs(coins - c0.matrix), axis=(1, 2))
        bound = envelope(recipe.perturbation, window.sites)
        if np.any(deviation > bound * (1.0 + 1e-12) + ROUNDING_FLOOR):
            worst = int(window.sites[np.argmax(deviation - bound)])
            raise EnvelopeViolation(f"Perturbed coin at site {worst} breaks the envelope bound")
    else:
        coins = np.broadcast_to(c0.matrix, (window.size, 2, 2)).copy()

    if defect_sites:
        c1 = make_defect_coin(recipe.defects.beta_prime, recipe.defects.gamma_prime)
        coins[[window.index(x) for x in defect_sites]] = c1.matrix

    for override in recipe.overrides:
        clash = set(override.sites) & set(defect_sites)
        if clash:
            raise UnsupportedParameter(
                f"Site override touches defect sites {sorted(clash)}; defects take precedence"
            )
        coins[[window.index(x) for x in override.sites]] = make_coin_c0(override.coin).matrix

    return CoinField(window, coins, recipe)
