"""Asymptotic two-detector equilibrium state built from (T, tau)"""

import math
from typing import Tuple, Union

import numpy as np

from app.exceptions import OutOfDomain
from app.models import DensityMatrix4, SpectralDecomp, XState, as_array, bloch_to_matrix
from app.utils.pauli import CORRELATORS, expectation

Eigenvalues = Tuple[float, float, float, float]


def check_pair(T: float, tau: float) -> None:
    """
    Reject (T, tau) outside |T| <= 1, -3 <= tau <= 1.

    Raises:
        OutOfDomain: Listing every violated bound
    """
    violations = []
    if not (math.isfinite(T) and -1.0 <= T <= 1.0):
        violations.append(("T", T, "[-1, 1]"))
    if not (math.isfinite(tau) and -3.0 <= tau <= 1.0):
        violations.append(("tau", tau, "[-3, 1]"))
    if violations:
        first, *others = violations
        raise OutOfDomain(*first, others=others)


def eigenvalues_from_complements(one_minus: float, one_plus: float, tau: float) -> Eigenvalues:
    """
    The four eigenvalues from the complements 1 - T and 1 + T.

    Uses T^2 + 3 = 4 - (1 - T)(1 + T) so that no step cancels.

    Args:
        one_minus: 1 - T
        one_plus: 1 + T
        tau: Initial-state constant in [-3, 1]

    Returns:
        (mu1, mu2, mu3, mu4) paired with |00>, |11>, psi+, psi-
    """
    gap = one_minus * one_plus
    denominator = 4.0 - gap
    scale = 0.25 * (tau + 3.0) / denominator
    return (
        scale * one_minus * one_minus,
        scale * one_plus * one_plus,
        scale * gap,
        0.25 * (1.0 - tau),
    )


def xstate(T: float, tau: float) -> XState:
    """
    The equilibrium X-matrix entries.

    Args:
        T: Kossakowski ratio in [-1, 1]
        tau: Initial-state constant in [-3, 1]

    Returns:
        XState with eta_minus in the |00> corner

    Raises:
        OutOfDomain: If (T, tau) is outside the domain
    """
    check_pair(T, tau)
    t2 = T * T
    denominator = 3.0 + t2
    return XState(
        eta_minus=(3.0 + tau) * (T - 1.0) ** 2 / (4.0 * denominator),
        eta_plus=(3.0 + tau) * (T + 1.0) ** 2 / (4.0 * denominator),
        eta_22=(3.0 - tau - (1.0 + tau) * t2) / (4.0 * denominator),
        eta_23=(tau - t2) / (2.0 * denominator),
    )


def bloch_coefficients(T: float, tau: float) -> Tuple[float, Tuple[float, float, float]]:
    """rho3 and (rho11, rho22, rho33) of the equilibrium state in Bloch form"""
    t2 = T * T
    denominator = 3.0 + t2
    rho3 = -T * (tau + 3.0) / denominator
    transverse = (tau - t2) / denominator
    longitudinal = (tau * (1.0 + t2) + 2.0 * t2) / denominator
    return rho3, (transverse, transverse, longitudinal)


def xstate_via_bloch(T: float, tau: float) -> DensityMatrix4:
    """
    The equilibrium state assembled from its Bloch coefficients.

    Independent of xstate; the two constructions agree entrywise to 1e-14.

    Raises:
        OutOfDomain: If (T, tau) is outside the domain
    """
    check_pair(T, tau)
    rho3, rho_diag = bloch_coefficients(T, tau)
    return bloch_to_matrix(rho3, rho_diag)


def spectral(T: float, tau: float) -> SpectralDecomp:
    """Closed-form eigenvalues of xstate(T, tau) with the fixed eigenbasis"""
    check_pair(T, tau)
    return SpectralDecomp(mu=eigenvalues_from_complements(1.0 - T, 1.0 + T, tau))


def tau_of_state(rho: Union[DensityMatrix4, np.ndarray]) -> float:
    """sum_i Tr[rho (s_i (x) s_i)]"""
    matrix = as_array(rho)
    return sum(expectation(matrix, correlator) for correlator in CORRELATORS)
