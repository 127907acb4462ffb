"""Quantum Fisher information for estimating beta, by mutually checking routes, and its peak"""

import logging
import math
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from app.config import DEFAULT_CONFIG, NumericsConfig
from app.exceptions import Degenerate, FlatLandscape, OutOfDomain, StepTooLarge
from app.models import DetectorParams, PeakResult, QfiValue, validate
from app.services import vacuum
from app.services.equilibrium import eigenvalues_from_complements

logger = logging.getLogger(__name__)

# An eigenvalue that underflowed to zero may still carry a denormal derivative
_DERIVATIVE_FLOOR = 1e-150


def _eigenvalues_at(p: DetectorParams) -> Tuple[float, float, float, float]:
    one_minus, one_plus = vacuum.ratio_complements(p)
    return eigenvalues_from_complements(one_minus, one_plus, p.tau)


def _classical_term(mu: Sequence[float], derivatives: Sequence[float]) -> float:
    """sum (d mu)^2 / mu with 0^2/0 = 0"""
    total = 0.0
    for index, (value, derivative) in enumerate(zip(mu, derivatives), 1):
        if value <= 0.0:
            if abs(derivative) > _DERIVATIVE_FLOOR:
                raise Degenerate(f"mu{index} = 0 while its beta-derivative is {derivative:.3e}")
            continue
        total += derivative * derivative / value
    return total


def eigenvalue_derivatives(p: DetectorParams) -> Tuple[float, float, float, float]:
    """Analytic d(mu_i)/d(beta) via the chain rule through T"""
    one_minus, one_plus = vacuum.ratio_complements(p)
    gap = one_minus * one_plus
    denominator = 4.0 - gap
    T = 0.5 * (one_plus - one_minus)
    scale = 0.25 * (p.tau + 3.0) / (denominator * denominator)
    dT = vacuum.dT_dbeta(p)
    return (
        -2.0 * scale * one_minus * (3.0 + T) * dT,
        2.0 * scale * one_plus * (3.0 - T) * dT,
        -8.0 * scale * T * dT,
        0.0,
    )


def qfi_spectral(p: DetectorParams) -> QfiValue:
    """
    QFI from eigenvalue derivatives; the eigenbasis does not depend on beta.

    Raises:
        Degenerate: If an eigenvalue vanishes while its derivative does not
    """
    return QfiValue(value=_classical_term(_eigenvalues_at(p), eigenvalue_derivatives(p)))


def qfi_closed(p: DetectorParams) -> QfiValue:
    """
    Closed form 2(tau+3)(3-T^2)(dT/dbeta)^2 / ((1-T^2)(3+T^2)^2).

    Args:
        p: Validated parameter point

    Returns:
        QfiValue; at |T| = 1 the limit 0 is returned when dT/dbeta underflowed

    Raises:
        Degenerate: If |T| = 1 in floating point but dT/dbeta is still nonzero
    """
    gap = vacuum.ratio_gap(p)
    dT = vacuum.dT_dbeta(p)
    if gap <= 0.0:
        if dT != 0.0:
            raise Degenerate(f"1 - T^2 vanished with dT/dbeta = {dT:.3e}")
        return QfiValue(value=0.0)
    denominator = 4.0 - gap
    value = 2.0 * (p.tau + 3.0) * (2.0 + gap) * dT * dT / (gap * denominator * denominator)
    return QfiValue(value=value)


def qfi_fd(p: DetectorParams, h: Optional[float] = None,
           config: NumericsConfig = DEFAULT_CONFIG) -> QfiValue:
    """
    QFI with eigenvalue derivatives taken by central difference in beta.

    Args:
        p: Validated parameter point
        h: Step in beta; defaults to config.fd_step_ratio * beta
        config: Numerical defaults

    Returns:
        QfiValue approximating qfi_spectral to second order in h

    Raises:
        OutOfDomain: If h is not positive
        StepTooLarge: If h >= beta / 10
    """
    step = config.fd_step_ratio * p.beta if h is None else h
    if not step > 0.0:
        raise OutOfDomain("h", step, "(0, beta/10)")
    if step >= 0.1 * p.beta:
        raise StepTooLarge(f"Finite-difference step {step:g} is not below beta/10 = {0.1 * p.beta:g}")

    upper = _eigenvalues_at(p.with_beta(p.beta + step))
    lower = _eigenvalues_at(p.with_beta(p.beta - step))
    derivatives = [(hi - lo) / (2.0 * step) for hi, lo in zip(upper, lower)]
    return QfiValue(value=_classical_term(_eigenvalues_at(p), derivatives))


def _state_at(p: DetectorParams) -> np.ndarray:
    # X-matrix from eigenvalues: eta22 = (mu3 + mu4)/2, eta23 = (mu3 - mu4)/2
    mu1, mu2, mu3, mu4 = _eigenvalues_at(p)
    inner, coherence = 0.5 * (mu3 + mu4), 0.5 * (mu3 - mu4)
    return np.array([
        [mu1, 0.0, 0.0, 0.0],
        [0.0, inner, coherence, 0.0],
        [0.0, coherence, inner, 0.0],
        [0.0, 0.0, 0.0, mu2],
    ], dtype=complex)


def qfi_dense(p: DetectorParams, h: Optional[float] = None,
              config: NumericsConfig = DEFAULT_CONFIG) -> QfiValue:
    """
    QFI from the general two-sided formula on the full 4x4 matrix.

    F = sum over lambda_i + lambda_j > floor of 2 |<i|d rho|j>|^2 / (lambda_i + lambda_j),
    with d rho by central difference and the eigenbasis from a dense solve.
    Agreement with qfi_spectral shows that the eigenvector part vanishes.
    """
    step = config.fd_step_ratio * p.beta if h is None else h
    if not step > 0.0:
        raise OutOfDomain("h", step, "(0, beta/10)")
    if step >= 0.1 * p.beta:
        raise StepTooLarge(f"Finite-difference step {step:g} is not below beta/10 = {0.1 * p.beta:g}")

    rho = _state_at(p)
    d_rho = (_state_at(p.with_beta(p.beta + step)) - _state_at(p.with_beta(p.beta - step))) / (2.0 * step)
    eigenvalues, eigenvectors = np.linalg.eigh(rho)
    projected = eigenvectors.conj().T @ d_rho @ eigenvectors
    sums = eigenvalues[:, None] + eigenvalues[None, :]
    mask = sums > config.dense_qfi_floor
    value = float(np.sum(2.0 * np.abs(projected[mask]) ** 2 / sums[mask]))
    return QfiValue(value=value)


def peak_qfi(omega: float, alpha: float, tau: float, bracket: Tuple[float, float],
             tol: Optional[float] = None, config: NumericsConfig = DEFAULT_CONFIG,
             qfi: Callable[[DetectorParams], QfiValue] = qfi_closed) -> PeakResult:
    """
    Maximise the QFI over beta inside a bracket.

    A coarse scan of log-spaced points picks the best interior grid point;
    golden-section search then refines it within its two neighbours.

    Args:
        omega: Detector gap
        alpha: Vacuum parameter (negative)
        tau: Initial-state constant
        bracket: (lo, hi) with 0 < lo < hi
        tol: Absolute tolerance on beta_star; defaults to config.peak_tol
        config: Numerical defaults
        qfi: QFI route used for the objective

    Returns:
        PeakResult with the refined maximum

    Raises:
        OutOfDomain: On invalid parameters, bracket or tol
        FlatLandscape: If the scan maximum sits on a bracket end
    """
    lo, hi = bracket
    if not (math.isfinite(lo) and math.isfinite(hi) and 0.0 < lo < hi):
        raise OutOfDomain("bracket", (lo, hi), "0 < lo < hi")
    tol = config.peak_tol if tol is None else tol
    if not tol > 0.0:
        raise OutOfDomain("tol", tol, "(0, inf)")
    base = validate(omega, lo, alpha, tau)

    def objective(beta: float) -> float:
        return qfi(base.with_beta(beta)).value

    grid = np.geomspace(lo, hi, config.peak_scan_points)
    values = np.array([objective(float(beta)) for beta in grid])
    best = int(np.argmax(values))
    if best == 0 or best == len(grid) - 1 or values[best] <= 0.0:
        raise FlatLandscape(
            f"QFI scan over [{lo:g}, {hi:g}] peaks at the bracket end beta={grid[best]:g}"
        )

    try:
        result = minimize_scalar(
            lambda beta: -objective(beta),
            bracket=(float(grid[best - 1]), float(grid[best]), float(grid[best + 1])),
            method="golden",
            options={"xtol": tol / (2.0 * hi)},
        )
    except ValueError as e:
        raise FlatLandscape(f"QFI has no interior bracket near beta={grid[best]:g}: {e}") from e

    beta_star, qfi_star = float(result.x), float(-result.fun)
    if qfi_star < values[best]:
        beta_star, qfi_star = float(grid[best]), float(values[best])

    evaluations = len(grid) + int(result.nfev)
    logger.info(f"QFI peak {qfi_star:.6g} at beta={beta_star:.6g} after {evaluations} evaluations")
    return PeakResult(beta_star=beta_star, qfi_star=qfi_star, bracket=(lo, hi), evaluations=evaluations)
