"""Single-qubit Pauli algebra and two-detector operators in the product basis

The ordered basis is {|00>, |01>, |10>, |11>} with s3|0> = +|0> and
s3|1> = -|1>; detector (a) is the left tensor factor.
"""

from typing import Sequence

import numpy as np

S0 = np.eye(2, dtype=complex)
S1 = np.array([[0, 1], [1, 0]], dtype=complex)
S2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
S3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (S1, S2, S3)

IDENTITY4 = np.kron(S0, S0)

# Gamma_i = s_i (x) s0 + s0 (x) s_i
GAMMA = tuple(np.kron(s, S0) + np.kron(S0, s) for s in PAULI)

# s_i (x) s_i correlators
CORRELATORS = tuple(np.kron(s, s) for s in PAULI)

# s_i (x) s0, local observables on detector (a)
LOCAL_A = tuple(np.kron(s, S0) for s in PAULI)
LOCAL_B = tuple(np.kron(S0, s) for s in PAULI)

_SQRT_HALF = 1.0 / np.sqrt(2.0)

# |00>, |11>, (|01>+|10>)/sqrt2, (|01>-|10>)/sqrt2 as columns
EIGENBASIS = np.array([
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, _SQRT_HALF, _SQRT_HALF],
    [0.0, 0.0, _SQRT_HALF, -_SQRT_HALF],
    [0.0, 1.0, 0.0, 0.0],
], dtype=complex)

for _operator in (S0, S1, S2, S3, IDENTITY4, EIGENBASIS, *GAMMA, *CORRELATORS, *LOCAL_A, *LOCAL_B):
    _operator.setflags(write=False)


def ket(label: str) -> np.ndarray:
    """Computational basis ket for a two-character label such as ``"01"``."""
    vec = np.zeros(4, dtype=complex)
    vec[int(label, 2)] = 1.0
    return vec


def projector(vec: np.ndarray) -> np.ndarray:
    """Rank-one projector |v><v| for a (not necessarily normalised) vector."""
    vec = np.asarray(vec, dtype=complex)
    vec = vec / np.linalg.norm(vec)
    return np.outer(vec, vec.conj())


def singlet() -> np.ndarray:
    """|psi-><psi-| with |psi-> = (|01> - |10>)/sqrt2."""
    return projector(ket("01") - ket("10"))


def bloch_matrix(rho3: float, rho_diag: Sequence[float]) -> np.ndarray:
    """
    Assemble 1/4 [I + rho3 Gamma_3 + sum_i rho_ii s_i (x) s_i] in the product basis.

    Args:
        rho3: Coefficient of Gamma_3
        rho_diag: Diagonal correlation coefficients (rho_11, rho_22, rho_33)

    Returns:
        4x4 complex matrix; positivity is not checked here
    """
    matrix = IDENTITY4 + rho3 * GAMMA[2]
    for coefficient, correlator in zip(rho_diag, CORRELATORS):
        matrix = matrix + coefficient * correlator
    return 0.25 * matrix


def expectation(rho: np.ndarray, operator: np.ndarray) -> float:
    """Real part of Tr[rho O]."""
    return float(np.trace(rho @ operator).real)


def trace_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Half the trace norm of a - b for Hermitian a, b."""
    difference = np.asarray(a) - np.asarray(b)
    difference = 0.5 * (difference + difference.conj().T)
    return float(0.5 * np.abs(np.linalg.eigvalsh(difference)).sum())
