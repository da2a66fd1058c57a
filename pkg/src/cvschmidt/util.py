"""Small helpers shared by the public modules."""

import math

from .errors import DomainError

_LN2 = math.log(2.0)


def log_divisor(log_base) -> float:
    """Return the factor that converts natural log to the requested base.

    Accepted bases are 2 and e, given as the integer 2, the string "2",
    the string "e", or math.e.
    """
    if log_base == 2 or log_base == "2":
        return _LN2
    if log_base == "e" or log_base == math.e:
        return 1.0
    raise DomainError(f"log base must be 2 or 'e', got {log_base!r}")


def format_float(value: float) -> str:
    """Serialize a float with 17 significant digits (lossless round trip)."""
    return format(float(value), ".17g")
