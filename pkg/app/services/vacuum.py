"""Spectral density of the massless field in alpha-vacua and the derived Kossakowski coefficients

Every quantity is assembled in log domain. With

    A = (1 + e^{alpha - pi omega})^2,  B = (1 + e^{alpha + pi omega})^2,  x = e^{-beta omega}

the ratio is T = (A - xB)/(A + xB) = tanh(d/2) where d = ln A - ln B + beta omega,
so T, its complements and dT/dbeta never overflow.
"""

import logging
import math
from typing import Tuple

import numpy as np
from scipy.special import expit

from app.exceptions import Overflow, OutOfDomain
from app.models import DetectorParams, KossakowskiSpectrum

logger = logging.getLogger(__name__)

# Largest finite exponent in binary64
LOG_MAX = math.log(np.finfo(float).max)

_LOG_TWO_PI = math.log(2.0 * math.pi)


def _log_a(p: DetectorParams) -> float:
    return 2.0 * float(np.logaddexp(0.0, p.alpha - math.pi * p.omega))


def _log_b(p: DetectorParams) -> float:
    return 2.0 * float(np.logaddexp(0.0, p.alpha + math.pi * p.omega))


def _log_norm(p: DetectorParams) -> float:
    # log(1 - e^{2 alpha}), alpha < 0
    return math.log(-math.expm1(2.0 * p.alpha))


def _exp_checked(log_value: float, quantity: str) -> float:
    if log_value > LOG_MAX:
        raise Overflow(f"{quantity} exceeds the binary64 range (log value {log_value:.6g})")
    return math.exp(log_value)


def log_spectral_density(p: DetectorParams, sign: int) -> float:
    """
    Natural log of Y(sign * omega).

    Both signs are rewritten with positive factors before taking logs:
    Y(+w) = w A / (2 pi (1 - x) N) and Y(-w) = w x B / (2 pi (1 - x) N),
    where N = 1 - e^{2 alpha}.

    Args:
        p: Validated parameter point
        sign: +1 for absorption-side Y(omega), -1 for Y(-omega)

    Returns:
        log Y(sign * omega), finite for every valid point

    Raises:
        OutOfDomain: If sign is not +1 or -1
    """
    if sign not in (1, -1):
        raise OutOfDomain("sign", sign, "{-1, +1}")

    beta_omega = p.beta * p.omega
    common = math.log(p.omega) - _LOG_TWO_PI - math.log(-math.expm1(-beta_omega)) - _log_norm(p)
    if sign == 1:
        return common + _log_a(p)
    return common + _log_b(p) - beta_omega


def spectral_density(p: DetectorParams, sign: int) -> float:
    """Y(sign * omega), strictly positive; raises Overflow outside the binary64 range"""
    return _exp_checked(log_spectral_density(p, sign), f"Y({'+' if sign == 1 else '-'}omega)")


def ratio_exponent(p: DetectorParams) -> float:
    """d with T = tanh(d/2); positive d means Y(omega) dominates"""
    return _log_a(p) - _log_b(p) + p.beta * p.omega


def ratio(p: DetectorParams) -> float:
    """T = sigma_minus / sigma_plus"""
    return math.tanh(0.5 * ratio_exponent(p))


def ratio_complements(p: DetectorParams) -> Tuple[float, float]:
    """
    (1 - T, 1 + T) without cancellation.

    1 - T = 2 expit(-d) and 1 + T = 2 expit(d), so the small complement keeps
    full relative precision even when T rounds to +-1.
    """
    d = ratio_exponent(p)
    return 2.0 * float(expit(-d)), 2.0 * float(expit(d))


def ratio_gap(p: DetectorParams) -> float:
    """1 - T^2 as the product of the two complements"""
    one_minus, one_plus = ratio_complements(p)
    return one_minus * one_plus


def kossakowski(p: DetectorParams) -> KossakowskiSpectrum:
    """
    Spectral densities and Kossakowski coefficients at one point.

    Raises:
        Overflow: If Y(omega) or Y(-omega) leaves the binary64 range
    """
    y_plus = spectral_density(p, 1)
    y_minus = spectral_density(p, -1)
    one_minus, one_plus = ratio_complements(p)

    return KossakowskiSpectrum(
        y_plus=y_plus,
        y_minus=y_minus,
        sigma_plus=0.5 * (y_plus + y_minus),
        sigma_minus=0.5 * (y_plus - y_minus),
        ratio=ratio(p),
        ratio_gap=one_minus * one_plus
    )


def dT_dbeta(p: DetectorParams) -> float:
    """
    Derivative of T with respect to beta.

    The quotient-rule form 2 A B omega x / (A + x B)^2 reduces to
    (omega / 2)(1 - T^2), which is evaluated through the complements.
    """
    return 0.5 * p.omega * ratio_gap(p)


def kms_defect(p: DetectorParams) -> float:
    """
    Deviation from detailed balance, |Y(-omega)/Y(omega) - e^{-beta omega}|.

    Equal to e^{-beta omega} (B/A - 1) with B >= A; zero only in the
    Bunch-Davies limit, where it is pure round-off.

    Raises:
        Overflow: If the defect itself exceeds the binary64 range
    """
    delta = _log_b(p) - _log_a(p)
    if delta <= 0.0:
        return 0.0
    log_defect = -p.beta * p.omega + delta + math.log(-math.expm1(-delta))
    return _exp_checked(log_defect, "KMS defect")


def zero_frequency_density(p: DetectorParams) -> float:
    """Y0(0) = (1 + e^alpha)^2 / (2 pi beta (1 - e^{2 alpha})), the omega -> 0+ limit"""
    log_value = 2.0 * float(np.logaddexp(0.0, p.alpha)) - _LOG_TWO_PI - math.log(p.beta) - _log_norm(p)
    return _exp_checked(log_value, "Y0(0)")
