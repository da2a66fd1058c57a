"""Schmidt information and coincidence-probability calculus.

For n perfectly correlated symbol pairs drawn from a spectrum with Schmidt
number K, the accidental all-match probability is K^(-n), the information
content is n log K, and the equivalent equiprobable-microstate count is
W = K^n.  W outgrows double range around n ln K ~ 700, so it is carried in
log space past that point, with an explicit flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError
from .util import log_divisor

# Past this, exp(x) exceeds double range (overflow near 709.8).
_LOG_SPACE_THRESHOLD = 700.0


class Microstates(NamedTuple):
    """Microstate count W, either directly or as ln W when `log_space`."""

    value: float
    log_space: bool


@dataclass(frozen=True)
class InfoReport:
    """All derived information quantities for one (K, n_symbols) pair.

    I_nats = ln W and p_coincidence = 1/W always hold; when `w_log_space`
    is true the W field stores ln W (so it equals I_nats) and
    p_coincidence underflows toward 0.
    """

    K: float
    n_symbols: int
    I_bits: float
    I_nats: float
    W: float
    p_coincidence: float
    w_log_space: bool = False


def _validate(K: float, n: int) -> None:
    if not K >= 1.0:
        raise DomainError(f"Schmidt number must be >= 1, got {K}")
    if n < 1:
        raise DomainError(f"symbol count must be >= 1, got {n}")


def coincidence_probability(K: float, n: int) -> float:
    """Accidental coincidence probability K**(-n) for n independent pairs."""
    _validate(K, n)
    return float(K) ** (-int(n))


def schmidt_information(K: float, n: int, log_base=math.e) -> float:
    """Information n*log(K) in the requested base; 0 iff K = 1."""
    _validate(K, n)
    return n * math.log(K) / log_divisor(log_base)


def effective_microstates(K: float, n: int) -> Microstates:
    """Equivalent equiprobable-state count W = K**n, log-space guarded.

    Returns (K**n, False) while representable; (n*ln K, True) once the
    direct value would overflow double range.
    """
    _validate(K, n)
    ln_w = n * math.log(K)
    if ln_w > _LOG_SPACE_THRESHOLD:
        return Microstates(value=ln_w, log_space=True)
    return Microstates(value=float(K) ** int(n), log_space=False)


def info_report(K: float, n_symbols: int) -> InfoReport:
    """Assemble the full InfoReport for one spectrum and sample size."""
    _validate(K, n_symbols)
    i_nats = schmidt_information(K, n_symbols, math.e)
    i_bits = schmidt_information(K, n_symbols, 2)
    w = effective_microstates(K, n_symbols)
    if w.log_space:
        p = math.exp(-i_nats)
    else:
        p = 1.0 / w.value
    return InfoReport(
        K=float(K),
        n_symbols=int(n_symbols),
        I_bits=i_bits,
        I_nats=i_nats,
        W=w.value,
        p_coincidence=p,
        w_log_space=w.log_space,
    )
