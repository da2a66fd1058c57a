"""Thermal-oscillator bridge for the geometric Schmidt spectrum.

A geometric spectrum with ratio q is the level occupation of a harmonic
oscillator in a thermal state: q = exp(-beta) with beta the dimensionless
ratio of oscillator quantum to temperature.  Only that single ratio ever
appears, so no unit plumbing (hbar, omega, theta separately) exists here.

Maps provided: beta <-> K, beta -> rho^2, and the oscillator entropy,
which coincides with the entanglement entropy of the Gaussian state at
K = coth(beta/2).  All formulas use expm1/log1p style evaluation; the
naive forms lose precision for beta below ~1e-8 and overflow above ~700.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .util import log_divisor


@dataclass(frozen=True)
class ThermoPoint:
    """One point on the temperature axis, beta = quantum/temperature > 0."""

    beta: float

    def __post_init__(self):
        if not self.beta > 0.0:
            raise DomainError(f"beta must be positive, got {self.beta}")

    def schmidt_number(self) -> float:
        return K_from_beta(self.beta)

    def rho_squared(self) -> float:
        return rho_squared_from_beta(self.beta)

    def entropy(self, log_base=math.e) -> float:
        return oscillator_entropy(self.beta, log_base)


def beta_from_K(K: float) -> float:
    """Inverse temperature ratio beta = log((K+1)/(K-1)), so exp(-beta) = q.

    Defined for K > 1 only; beta diverges as K -> 1 (no entanglement).
    """
    if not K > 1.0:
        raise DomainError(f"beta is finite only for K > 1, got {K}")
    return math.log1p(2.0 / (K - 1.0))


def K_from_beta(beta: float) -> float:
    """Schmidt number K = coth(beta/2); large for hot, -> 1 for cold."""
    if not beta > 0.0:
        raise DomainError(f"beta must be positive, got {beta}")
    return 1.0 / math.tanh(0.5 * beta)


def rho_squared_from_beta(beta: float) -> float:
    """Squared correlation rho^2 = 1/cosh^2(beta/2).

    Evaluated as 4t/(1+t)^2 with t = exp(-beta), which stays in range for
    every positive beta.
    """
    if not beta > 0.0:
        raise DomainError(f"beta must be positive, got {beta}")
    t = math.exp(-beta)
    return 4.0 * t / ((1.0 + t) * (1.0 + t))


def oscillator_entropy(beta: float, log_base=math.e) -> float:
    """Thermal oscillator entropy S = -log(1 - e^-beta) + beta/(e^beta - 1).

    Written with u = 1 - e^-beta = -expm1(-beta):  S = -log(u) + beta(1-u)/u,
    accurate for small beta and free of overflow for large beta.  Equals the
    geometric-spectrum entanglement entropy at K = coth(beta/2).
    """
    if not beta > 0.0:
        raise DomainError(f"beta must be positive, got {beta}")
    divisor = log_divisor(log_base)
    u = -math.expm1(-beta)
    entropy = -math.log(u) + beta * (1.0 - u) / u
    return max(entropy, 0.0) / divisor
