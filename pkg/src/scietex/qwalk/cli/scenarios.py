"""
Reference scenarios.

Both reference walks use the Hadamard bulk coin and start from the spinor
``(1/sqrt(6), i/sqrt(6))`` on the sites ``{-1, 0, 1}``; they differ on those three sites:

- ``edge``: edge defects centered at 0 and 1, i.e. the reflecting coin ``[[0, 1], [-1, 0]]`` on
  ``{-1, 0, 1}``;
- ``vertex``: the identity coin on ``{-1, 0, 1}`` and no edge defect.

Classes:
    - Scenario: Names of the reference scenarios.

Functions:
    - scenario_config: Configuration of a reference scenario.
"""

import math

from ..base.choice import ChoiceEnum
from ..lattice.params import DefectSpec, ModelParams, SiteOverride
from .config import ExperimentConfig, InitialStateConfig, InitialStateKind

REFERENCE_SITES: tuple[int, ...] = (-1, 0, 1)
_AMPLITUDE = 1.0 / math.sqrt(6.0)


class Scenario(ChoiceEnum):
    """
    Reference scenarios.

    Members:
        EDGE: Hadamard walk with edge defects on {-1, 0, 1}.
        VERTEX: Hadamard walk with the identity coin on {-1, 0, 1}.
    """

    EDGE = "edge"
    VERTEX = "vertex"


def _initial_state() -> InitialStateConfig:
    return InitialStateConfig(
        kind=InitialStateKind.UNIFORM_ON_SET,
        sites=REFERENCE_SITES,
        spinor=((_AMPLITUDE, 0.0), (0.0, _AMPLITUDE)),
    )


def scenario_config(scenario: Scenario | str) -> ExperimentConfig:
    """
    Configuration of a reference scenario with all other settings at their defaults.

    Args:
        scenario (Scenario | str): Scenario name.

    Returns:
        ExperimentConfig: The configuration.

    Raises:
        ValueError: If the name is unknown.
    """
    scenario = Scenario.from_string(str(scenario))
    if scenario == Scenario.EDGE:
        return ExperimentConfig(
            model=ModelParams(),
            defects=DefectSpec(centers=(0, 1)),
            initial_state=_initial_state(),
        )
    return ExperimentConfig(
        model=ModelParams(),
        site_overrides=(SiteOverride(sites=REFERENCE_SITES, coin=ModelParams(p=1.0)),),
        initial_state=_initial_state(),
    )
