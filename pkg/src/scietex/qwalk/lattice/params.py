"""
Model parameter module.

Validated, immutable parameter models of the quantum walk:

- `ModelParams`: bulk coin parameters `(p, alpha, beta, gamma)` with `q = sqrt(1 - p^2)`.
- `DefectSpec`: edge-defect centers `y_j` and the phases `(beta', gamma')` of the reflecting coin.
- `PerturbationSpec`: exponentially decaying random perturbation of the bulk coin.
- `SiteOverride`: explicit coin for a set of sites (e.g. identity coin on a few vertices).

All phases are reduced to [0, 2pi) on validation.
"""

import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, field_validator

from ..base.choice import ChoiceEnum
from ..base.phase import reduce_phase

HADAMARD_P: float = math.sqrt(0.5)


def _reduce(value: float) -> float:
    return float(reduce_phase(value))


class ModelParams(BaseModel):
    """
    Bulk coin parameters.

    Attributes:
        p (float): Diagonal modulus in [0, 1]. Defaults to 1/sqrt(2) (Hadamard walk).
        alpha (float): Phase of the diagonal entries.
        beta (float): Phase of the off-diagonal entries.
        gamma (float): Global phase; the determinant of the coin is exp(i gamma).
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    p: float = Field(default=HADAMARD_P, ge=0.0, le=1.0)
    alpha: FiniteFloat = 0.0
    beta: FiniteFloat = 0.0
    gamma: FiniteFloat = 0.0

    @field_validator("alpha", "beta", "gamma")
    @classmethod
    def reduce_phases(cls, value: float) -> float:
        return _reduce(value)

    @property
    def q(self) -> float:
        """Off-diagonal modulus, always the non-negative root sqrt(1 - p^2)."""
        return math.sqrt(max(0.0, 1.0 - self.p * self.p))


class DefectSpec(BaseModel):
    """
    Edge-defect specification.

    Each center `y` marks the edge defect `{y - 1, y}` on which the coin is the anti-diagonal
    reflecting coin built from `(beta_prime, gamma_prime)`. Neighbouring defects may share a
    site.

    Attributes:
        centers (tuple[int, ...]): Defect centers, sorted ascending, without duplicates.
        beta_prime (float): Off-diagonal phase of the defect coin.
        gamma_prime (float): Global phase of the defect coin.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    centers: tuple[int, ...] = ()
    beta_prime: FiniteFloat = 0.0
    gamma_prime: FiniteFloat = 0.0

    @field_validator("beta_prime", "gamma_prime")
    @classmethod
    def reduce_phases(cls, value: float) -> float:
        return _reduce(value)

    @field_validator("centers")
    @classmethod
    def sorted_unique(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if len(set(value)) != len(value):
            raise ValueError(f"duplicate defect centers in {list(value)}")
        return tuple(sorted(value))

    @property
    def sites(self) -> tuple[int, ...]:
        """Defect site set e, the union of `{y - 1, y}` over all centers."""
        return tuple(sorted({x for y in self.centers for x in (y - 1, y)}))

    @property
    def bounds(self) -> Optional[tuple[int, int]]:
        """`(x_*, x^*)`, the smallest and largest defect sites, or None without defects."""
        sites = self.sites
        if not sites:
            return None
        return sites[0], sites[-1]


class PerturbationKind(ChoiceEnum):
    """
    Kinds of bulk-coin perturbation.

    Members:
        NONE: The coin off the defect sites is exactly the bulk coin.
        EXPONENTIAL: Seeded random perturbation inside the envelope M exp(-rho <x>).
    """

    NONE = "none"
    EXPONENTIAL = "exponential"


class PerturbationSpec(BaseModel):
    """
    Perturbation of the bulk coin away from the defects.

    Attributes:
        kind (PerturbationKind): Perturbation kind. Defaults to none.
        M (float): Envelope amplitude, > 0.
        rho (float): Envelope decay rate, > 0.
        delta (float): Lower bound for the modulus of the diagonal coin entry, in (0, 1].
        seed (int): Unsigned 64-bit seed of the generator.
    """

    # pylint: disable=invalid-name
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: PerturbationKind = PerturbationKind.NONE
    M: float = Field(default=0.05, gt=0.0, allow_inf_nan=False)
    rho: float = Field(default=1.0, gt=0.0, allow_inf_nan=False)
    delta: float = Field(default=0.1, gt=0.0, le=1.0)
    seed: int = Field(default=0, ge=0, lt=2**64)

    def envelope(self, x: int) -> float:
        """Envelope bound M exp(-rho <x>) with <x> = sqrt(1 + x^2)."""
        return self.M * math.exp(-self.rho * math.sqrt(1.0 + float(x) ** 2))


class SiteOverride(BaseModel):
    """
    Explicit coin on a set of sites.

    Attributes:
        sites (tuple[int, ...]): Sites, sorted ascending, without duplicates.
        coin (ModelParams): Parameters of the coin placed on those sites.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    sites: tuple[int, ...]
    coin: ModelParams

    @field_validator("sites")
    @classmethod
    def sorted_unique(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if not value:
            raise ValueError("site override needs at least one site")
        if len(set(value)) != len(value):
            raise ValueError(f"duplicate override sites in {list(value)}")
        return tuple(sorted(value))
