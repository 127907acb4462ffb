"""Local quantum uncertainty: closed form for the X-family and a matrix-square-root oracle"""

import math
from typing import Sequence, Tuple, Union

import numpy as np

from app.config import DEFAULT_CONFIG, NumericsConfig
from app.exceptions import Degenerate, NotPositive
from app.models import DensityMatrix4, LquValue, as_array
from app.services.equilibrium import check_pair
from app.utils.pauli import LOCAL_A, LOCAL_B

# Eigenvalues below this make a matrix unusable as a state
NEGATIVITY_FLOOR = 1e-8

# Round-off allowed on LQU before clamping into [0, 1]
_CLAMP_TOL = 1e-12

MatrixLike = Union[DensityMatrix4, np.ndarray]


def theta_closed(T: float, tau: float) -> Tuple[float, float]:
    """
    The two candidate maxima of the Pi matrix for the equilibrium state.

    theta11 = (sqrt(eta_-) + sqrt(eta_+)) (sqrt(1 - tau) + sqrt((1 - T^2)(tau + 3)/(T^2 + 3))) / 2
    theta33 = (tau + 3)/2 - (tau + 3)/(T^2 + 3) + sqrt((1 - tau)(1 - T^2)(tau + 3) / (4 (T^2 + 3)))

    theta22 equals theta11 for this family.

    Raises:
        OutOfDomain: If (T, tau) is outside the domain
    """
    check_pair(T, tau)
    gap = (1.0 - T) * (1.0 + T)
    denominator = T * T + 3.0
    weight = tau + 3.0
    eta_minus = weight * (1.0 - T) ** 2 / (4.0 * denominator)
    eta_plus = weight * (1.0 + T) ** 2 / (4.0 * denominator)

    theta11 = 0.5 * (math.sqrt(eta_minus) + math.sqrt(eta_plus)) * (
        math.sqrt(1.0 - tau) + math.sqrt(gap * weight / denominator)
    )
    theta33 = 0.5 * weight - weight / denominator + math.sqrt((1.0 - tau) * gap * weight / (4.0 * denominator))
    return theta11, theta33


def _bounded(value: float) -> float:
    if value < -_CLAMP_TOL or value > 1.0 + _CLAMP_TOL:
        raise Degenerate(f"LQU {value:.17g} outside [0, 1] beyond round-off")
    return min(max(value, 0.0), 1.0)


def lqu_closed(T: float, tau: float) -> LquValue:
    """LQU = 1 - max(theta11, theta33) from the closed forms"""
    theta11, theta33 = theta_closed(T, tau)
    return LquValue(value=_bounded(1.0 - max(theta11, theta33)), theta11=theta11, theta33=theta33)


def sqrt_state(rho: MatrixLike, config: NumericsConfig = DEFAULT_CONFIG) -> np.ndarray:
    """
    Principal square root of a density matrix by dense eigensolve.

    Raises:
        NotPositive: If an eigenvalue is below -1e-8
    """
    matrix = as_array(rho)
    matrix = 0.5 * (matrix + matrix.conj().T)
    eigenvalues, eigenvectors = np.linalg.eigh(matrix)
    if eigenvalues.min() < -NEGATIVITY_FLOOR:
        raise NotPositive(f"Matrix has eigenvalue {eigenvalues.min():.3e} below -{NEGATIVITY_FLOOR:g}")
    roots = np.sqrt(np.where(eigenvalues > config.sqrt_floor, eigenvalues, 0.0))
    return (eigenvectors * roots) @ eigenvectors.conj().T


def pi_matrix(rho: MatrixLike, local: Sequence[np.ndarray] = LOCAL_A,
              config: NumericsConfig = DEFAULT_CONFIG) -> np.ndarray:
    """
    Real symmetric 3x3 matrix Pi_ij = Tr[sqrt(rho) A_i sqrt(rho) A_j].

    Args:
        rho: Two-detector state
        local: The three local Pauli operators of the measured detector
        config: Numerical defaults

    Returns:
        Pi as a real array

    Raises:
        NotPositive: If rho is not PSD
        Degenerate: If Pi is not real symmetric PSD beyond round-off
    """
    root = sqrt_state(rho, config)
    pi = np.array([
        [np.trace(root @ a_i @ root @ a_j) for a_j in local]
        for a_i in local
    ])
    if np.max(np.abs(pi.imag)) > 1e-10 or np.max(np.abs(pi - pi.T)) > 1e-10:
        raise Degenerate("Pi matrix is not real symmetric")
    pi = 0.5 * (pi.real + pi.real.T)
    if np.linalg.eigvalsh(pi).min() < -1e-10:
        raise Degenerate("Pi matrix is not positive semidefinite")
    return pi


def skew_information(rho: MatrixLike, observable: np.ndarray,
                     config: NumericsConfig = DEFAULT_CONFIG) -> float:
    """Wigner-Yanase skew information -1/2 Tr([sqrt(rho), K]^2)"""
    root = sqrt_state(rho, config)
    commutator = root @ observable - observable @ root
    return float(-0.5 * np.trace(commutator @ commutator).real)


def _lqu_from_pi(pi: np.ndarray) -> LquValue:
    top = float(np.linalg.eigvalsh(pi).max())
    return LquValue(value=_bounded(1.0 - top), theta11=float(pi[0, 0]), theta33=float(pi[2, 2]))


def lqu_oracle(rho: MatrixLike, config: NumericsConfig = DEFAULT_CONFIG) -> LquValue:
    """
    LQU with respect to detector (a) from the top eigenvalue of Pi.

    Args:
        rho: Any valid two-detector state
        config: Numerical defaults

    Returns:
        LquValue with theta11 = Pi_11 and theta33 = Pi_33

    Raises:
        NotPositive: If rho has an eigenvalue below -1e-8
    """
    return _lqu_from_pi(pi_matrix(rho, LOCAL_A, config))


def lqu_subsystem_b(rho: MatrixLike, config: NumericsConfig = DEFAULT_CONFIG) -> LquValue:
    """LQU with respect to detector (b)"""
    return _lqu_from_pi(pi_matrix(rho, LOCAL_B, config))
