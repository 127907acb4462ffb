"""Kossakowski-Lindblad dynamics of the two detectors, integrated as an oracle for the equilibrium state

States are vectorised row-major, so vec(A rho B) = (A (x) B^T) vec(rho).
The environment-induced Hamiltonian shift is not modelled; only H = (omega/2) Gamma_3
and the collective dissipator enter the generator.
"""

import logging
import math
from typing import Optional, Sequence, Union

import numpy as np

from app.config import DEFAULT_CONFIG, NumericsConfig
from app.exceptions import NotAState, OutOfDomain, StepTooLarge, StepUnstable
from app.models import DensityMatrix4, DetectorParams, LindbladCoeffs, Trajectory, as_array
from app.services import vacuum
from app.services.equilibrium import tau_of_state, xstate
from app.utils import pauli
from app.utils.pauli import GAMMA, IDENTITY4, bloch_matrix

logger = logging.getLogger(__name__)

# Levi-Civita symbol restricted to k = 3
_EPSILON_3 = np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])

# Positivity floor for sampled states
SAMPLE_PSD_FLOOR = 1e-8


def coefficients(p: DetectorParams) -> LindbladCoeffs:
    """kappa_plus, kappa_minus, tau_k = Y0(0) - kappa_plus and omega at one point"""
    spectrum = vacuum.kossakowski(p)
    return LindbladCoeffs(
        kappa_plus=spectrum.sigma_plus,
        kappa_minus=spectrum.sigma_minus,
        tau_k=vacuum.zero_frequency_density(p) - spectrum.sigma_plus,
        omega=p.omega
    )


def kossakowski_matrix(c: LindbladCoeffs) -> np.ndarray:
    """Omega_ij = kappa_plus delta_ij - i kappa_minus epsilon_ij3 + tau_k delta_3i delta_3j"""
    omega = c.kappa_plus * np.eye(3, dtype=complex) - 1j * c.kappa_minus * _EPSILON_3
    omega[2, 2] += c.tau_k
    return omega


def liouvillian(c: LindbladCoeffs) -> np.ndarray:
    """
    16x16 superoperator of -i[H, rho] + L[rho].

    L[rho] = sum_ij Omega_ij / 2 (2 S_j rho S_i - {S_i S_j, rho}) with the
    collective operators S_i = Gamma_i.
    """
    hamiltonian = 0.5 * c.omega * GAMMA[2]
    superoperator = -1j * (np.kron(hamiltonian, IDENTITY4) - np.kron(IDENTITY4, hamiltonian.T))

    omega = kossakowski_matrix(c)
    for i, s_i in enumerate(GAMMA):
        for j, s_j in enumerate(GAMMA):
            if omega[i, j] == 0:
                continue
            product = s_i @ s_j
            superoperator = superoperator + 0.5 * omega[i, j] * (
                2.0 * np.kron(s_j, s_i.T)
                - np.kron(product, IDENTITY4)
                - np.kron(IDENTITY4, product.T)
            )
    return superoperator


def generator(rho: Union[DensityMatrix4, np.ndarray], c: LindbladCoeffs) -> np.ndarray:
    """d rho / dt at rho"""
    return (liouvillian(c) @ as_array(rho).reshape(16)).reshape(4, 4)


def trace_distance(a: Union[DensityMatrix4, np.ndarray], b: Union[DensityMatrix4, np.ndarray]) -> float:
    """Half the trace norm of a - b"""
    return pauli.trace_distance(as_array(a), as_array(b))


def rk4_propagator(superoperator: np.ndarray, step: float) -> np.ndarray:
    """One classical fourth-order Runge-Kutta step for a linear system, as a matrix"""
    scaled = step * superoperator
    propagator = np.eye(superoperator.shape[0], dtype=complex)
    term = np.eye(superoperator.shape[0], dtype=complex)
    for order in range(1, 5):
        term = term @ scaled / order
        propagator = propagator + term
    return propagator


def integrate(rho0: Union[DensityMatrix4, np.ndarray], c: LindbladCoeffs, t_end: float,
              dt: Optional[float] = None, samples: Optional[int] = None,
              config: NumericsConfig = DEFAULT_CONFIG) -> Trajectory:
    """
    Fixed-step RK4 integration of the master equation.

    The step is shortened so that a whole number of steps lands on t_end.
    Each step is re-Hermitised; samples are stored unit-trace and compared
    with xstate(kappa_minus / kappa_plus, tau(rho0)).

    Args:
        rho0: Initial state
        c: Kossakowski coefficients
        t_end: Final time
        dt: Maximum step; defaults to config.lindblad_step_factor / kappa_plus
        samples: Number of stored samples; defaults to config.lindblad_samples
        config: Numerical defaults

    Returns:
        Trajectory with the sampled states and their distances to equilibrium

    Raises:
        StepTooLarge: If dt exceeds the stability envelope 0.01 / kappa_plus
        OutOfDomain: If t_end < dt or dt is not positive
        StepUnstable: If the trace drifts by more than config.trace_drift_tol
    """
    max_step = config.lindblad_step_factor / c.kappa_plus
    dt = max_step if dt is None else dt
    if not dt > 0.0:
        raise OutOfDomain("dt", dt, f"(0, {max_step:g}]")
    if dt > max_step * (1.0 + 1e-12):
        raise StepTooLarge(f"Step {dt:g} exceeds the stability envelope {max_step:g}")
    if not (math.isfinite(t_end) and t_end >= dt):
        raise OutOfDomain("t_end", t_end, f"[{dt:g}, inf)")

    steps = math.ceil(t_end / dt - 1e-9)
    step = t_end / steps
    count = min(samples or config.lindblad_samples, steps)
    sample_steps = sorted({int(round(k * steps / count)) for k in range(1, count + 1)})

    initial = as_array(rho0)
    tau = tau_of_state(initial)
    target = xstate(c.ratio, min(max(tau, -3.0), 1.0)).to_array()
    propagator = rk4_propagator(liouvillian(c), step)

    logger.debug(f"Integrating {steps} steps of {step:.3e} up to t={t_end:.3e}")
    vector = initial.reshape(16).copy()
    times, states, distances, taus = [], [], [], []
    next_sample = 0
    for index in range(1, steps + 1):
        vector = propagator @ vector
        matrix = vector.reshape(4, 4)
        matrix = 0.5 * (matrix + matrix.conj().T)
        trace = np.trace(matrix).real
        if abs(trace - 1.0) > config.trace_drift_tol:
            raise StepUnstable(f"Trace drifted to {trace:.17g} at t={index * step:.6g}")
        vector = matrix.reshape(16)

        if index == sample_steps[next_sample]:
            state = DensityMatrix4.from_array(matrix / trace, psd_tol=SAMPLE_PSD_FLOOR)
            times.append(index * step)
            states.append(state)
            distances.append(trace_distance(state, target))
            taus.append(tau_of_state(state))
            next_sample += 1

    final_distance = distances[-1]
    converged = final_distance < config.convergence_tol
    if not converged:
        logger.warning(f"Trajectory ended {final_distance:.3e} away from equilibrium")
    return Trajectory(
        times=times,
        states=states,
        distances=distances,
        taus=taus,
        converged=converged,
        final_distance=final_distance
    )


def bell_diagonal(r1: float, r2: float, r3: float) -> DensityMatrix4:
    """
    Bell-diagonal state 1/4 (I + sum_i r_i s_i (x) s_i).

    Raises:
        OutOfDomain: If some |r_i| > 1
        NotAState: If the matrix has an eigenvalue below -1e-12
    """
    values: Sequence[float] = (r1, r2, r3)
    violations = [
        (f"r{index}", value, "[-1, 1]")
        for index, value in enumerate(values, 1)
        if not (math.isfinite(value) and abs(value) <= 1.0)
    ]
    if violations:
        first, *others = violations
        raise OutOfDomain(*first, others=others)

    matrix = bloch_matrix(0.0, values)
    smallest = float(np.linalg.eigvalsh(matrix).min())
    if smallest < -1e-12:
        raise NotAState(f"Coefficients {values} give eigenvalue {smallest:.3e}")
    return DensityMatrix4(entries=matrix)
