"""
Lattice Subpackage.

This subpackage represents walker states and coin fields on a finite window of the integer
lattice and applies the time step U = SC of the two-state quantum walk exactly.

Classes:
    Window: Inclusive range of lattice sites.
    Boundary: Boundary modes of the time step (padded, periodic, truncate).
    ModelParams: Bulk coin parameters (p, alpha, beta, gamma).
    DefectSpec: Edge-defect centers and the phases of the reflecting coin.
    PerturbationKind: Kinds of bulk perturbation.
    PerturbationSpec: Exponentially decaying random perturbation of the bulk coin.
    SiteOverride: Explicit coin on a set of sites.
    CoinMatrix: Immutable 2x2 coin.
    CoinField: Per-site coins over a window.
    FieldRecipe: Parameters a coin field was assembled from.
    State: Two-component amplitude field over a window.

Modules:
    window, boundary, params, coin, state, field, evolution.
"""

from .window import Window
from .boundary import Boundary
from .params import (
    HADAMARD_P,
    ModelParams,
    DefectSpec,
    PerturbationKind,
    PerturbationSpec,
    SiteOverride,
)
from .coin import CoinMatrix, coin_array, make_coin_c0, make_defect_coin, unitarity_defect
from .state import State
from .field import CoinField, FieldRecipe, assemble_coin_field, perturbation_coins, envelope
from .evolution import step, evolve, position_distribution

__all__ = [
    "Window",
    "Boundary",
    "HADAMARD_P",
    "ModelParams",
    "DefectSpec",
    "PerturbationKind",
    "PerturbationSpec",
    "SiteOverride",
    "CoinMatrix",
    "coin_array",
    "make_coin_c0",
    "make_defect_coin",
    "unitarity_defect",
    "State",
    "CoinField",
    "FieldRecipe",
    "assemble_coin_field",
    "perturbation_coins",
    "envelope",
    "step",
    "evolve",
    "position_distribution",
]
