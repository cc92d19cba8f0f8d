"""
Defect eigenfunction module.

An edge defect ``{y - 1, y}`` carrying the reflecting coin traps the two-site state

    psi_+-(x) = (1/sqrt(2)) [ -+i exp(i(beta' - gamma'/2)) delta(x + 1) ; delta(x) ]

translated to ``y``: component 0 sits on ``y - 1``, component 1 on ``y``. It is an eigenvector of
the walk with eigenvalue ``+-i exp(i gamma'/2)`` whatever the coins elsewhere are, and any
superposition over the defects is one too.

Classes:
    - Sign: Which of the two eigenvalues.
    - DefectEigenfunction: Superposition of translated two-site eigenvectors.

Functions:
    - translate: Translation of a state by y sites.
    - default_kappas: Symmetric normalized coefficients.
    - build_defect_eigenfunction: Build the eigenfunction for a defect set.
    - verify_eigenpair: Residual of a candidate eigenpair under the exact step.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..base.choice import ChoiceEnum
from ..base.errors import AllZeroCoefficients, UnsupportedParameter, WindowTooSmall
from ..lattice.boundary import Boundary
from ..lattice.evolution import step
from ..lattice.field import CoinField
from ..lattice.params import DefectSpec
from ..lattice.state import State
from ..lattice.window import Window


def translate(state: State, y: int) -> State:
    """Translation ``(T_y psi)(x) = psi(x - y)``; the window moves along."""
    return state.shifted(y)


class Sign(ChoiceEnum):
    """
    Sign of the defect eigenvalue ``+-i exp(i gamma'/2)``.

    Members:
        PLUS: Eigenvalue ``+i exp(i gamma'/2)``.
        MINUS: Eigenvalue ``-i exp(i gamma'/2)``.
    """

    PLUS = "+"
    MINUS = "-"

    @property
    def factor(self) -> int:
        """+1 or -1."""
        return 1 if self == Sign.PLUS else -1


def defect_eigenvalue(gamma_prime: float, sign: Sign) -> complex:
    """Eigenvalue ``+-i exp(i gamma'/2)`` of the defect eigenfunctions."""
    return complex(Sign(sign).factor * 1j * np.exp(0.5j * gamma_prime))


def default_kappas(n: int) -> list[complex]:
    """Coefficients ``kappa_j = 1/sqrt(n)``."""
    if n < 1:
        raise AllZeroCoefficients("At least one defect is needed for default coefficients")
    return [complex(1.0 / np.sqrt(n))] * n


@dataclass(frozen=True)
class DefectEigenfunction:
    """
    Eigenfunction of the walk built from edge defects.

    Attributes:
        sign (Sign): Which eigenvalue.
        beta_prime (float): Off-diagonal phase of the defect coin.
        gamma_prime (float): Global phase of the defect coin.
        kappas (tuple[complex, ...]): Coefficient per defect center.
        state (State): The eigenfunction, supported on the defect sites.
    """

    sign: Sign
    beta_prime: float
    gamma_prime: float
    kappas: tuple[complex, ...]
    state: State

    @property
    def eigenvalue(self) -> complex:
        """Eigenvalue ``+-i exp(i gamma'/2)``."""
        return defect_eigenvalue(self.gamma_prime, self.sign)


def build_defect_eigenfunction(
    defects: DefectSpec,
    kappas: Optional[Sequence[complex]] = None,
    sign: Sign = Sign.PLUS,
    normalize: bool = True,
) -> DefectEigenfunction:
    """
    Superposition ``sum_j kappa_j T_{y_j} psi_sign`` over the defect centers.

    Args:
        defects (DefectSpec): Defect centers and phases.
        kappas (Optional[Sequence[complex]], optional): One coefficient per center; defaults to
            ``1/sqrt(N)`` each.
        sign (Sign, optional): Eigenvalue sign. Defaults to ``+``.
        normalize (bool, optional): Scale the result to unit norm. Defaults to True.

    Returns:
        DefectEigenfunction: The eigenfunction on the window ``[x_*, x^*]``.

    Raises:
        UnsupportedParameter: If the number of coefficients differs from the number of centers.
        AllZeroCoefficients: If there are no centers or every coefficient is zero.
    """
    sign = Sign(sign)
    centers = defects.centers
    if kappas is None:
        coeffs = default_kappas(len(centers))
    else:
        coeffs = [complex(k) for k in kappas]
    if len(coeffs) != len(centers):
        raise UnsupportedParameter(
            f"Expected {len(centers)} coefficients (one per defect center), got {len(coeffs)}"
        )
    if not coeffs or not any(k != 0 for k in coeffs):
        raise AllZeroCoefficients("Defect eigenfunction needs a nonzero coefficient")

    half_beta = defects.beta_prime - 0.5 * defects.gamma_prime
    left = -sign.factor * 1j * np.exp(1j * half_beta) / np.sqrt(2.0)
    right = 1.0 / np.sqrt(2.0)
    window = Window.covering(defects.sites)
    amp = np.zeros((window.size, 2), dtype=np.complex128)
    for y, kappa in zip(centers, coeffs):
        amp[window.index(y - 1), 0] += kappa * left
        amp[window.index(y), 1] += kappa * right
    state = State(window, amp)
    if normalize:
        state = state.normalized()
    return DefectEigenfunction(
        sign=sign,
        beta_prime=defects.beta_prime,
        gamma_prime=defects.gamma_prime,
        kappas=tuple(coeffs),
        state=state,
    )


def verify_eigenpair(field: CoinField, lam: complex, state: State) -> float:
    """
    Residual ``||U psi - lambda psi||`` of a candidate eigenpair.

    The step is applied with the padded boundary, so the residual is that of the walk on the
    full lattice.

    Args:
        field (CoinField): Coin field.
        lam (complex): Candidate eigenvalue.
        state (State): Candidate eigenvector.

    Returns:
        float: The residual (0 for the zero state).

    Raises:
        WindowTooSmall: If the field window does not cover the support of `state` with a
            one-site margin.
    """
    support = state.support()
    if support is None:
        return 0.0
    if support.expanded(1) not in field.window:
        raise WindowTooSmall(
            f"Field window {field.window} does not cover state support {support} "
            "with a one-site margin"
        )
    local = state.restricted(support)
    moved = step(local, field, Boundary.PADDED)
    return moved.distance(local.scaled(lam))
