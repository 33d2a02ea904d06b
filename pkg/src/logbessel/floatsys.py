"""Binary floating-point system descriptors.

A system is described by the significand precision P (in bits), the
smallest exponent L and the largest exponent U.  The derived range
levels are

    B_SDN = 2^(L-P)            smallest positive subnormal
    B_UFL = 2^L                smallest positive normal (underflow level)
    B_OFL = (1 - 2^-P) 2^(U+1) largest finite value (overflow level)

The analyzed system is decoupled from the system running the analysis:
all range certificates work from the exact log-domain levels, so a
single-precision system can be analyzed from inside double precision
without ever forming out-of-range quantities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import DomainError

_LOG2 = math.log(2.0)


@dataclass(frozen=True)
class FloatSystem:
    """Immutable descriptor of a binary floating-point system."""

    precision_bits: int
    min_exponent: int
    max_exponent: int

    def __post_init__(self):
        if self.precision_bits < 1:
            raise DomainError("precision_bits must be >= 1")
        if not (self.min_exponent < 0 < self.max_exponent):
            raise DomainError("exponents must satisfy L < 0 < U")

    @property
    def smallest_subnormal(self) -> float:
        return math.ldexp(1.0, self.min_exponent - self.precision_bits)

    @property
    def underflow_level(self) -> float:
        return math.ldexp(1.0, self.min_exponent)

    @property
    def overflow_level(self) -> float:
        # (1 - 2^-P) 2^(U+1) == (2^P - 1) 2^(U+1-P); the first form can
        # overflow the working precision (e.g. 2^1024), the second cannot.
        if self.precision_bits <= 53:
            return math.ldexp(float(2**self.precision_bits - 1),
                              self.max_exponent + 1 - self.precision_bits)
        return math.exp(self.log_overflow_level)

    @property
    def log_underflow_level(self) -> float:
        return self.min_exponent * _LOG2

    @property
    def log_smallest_subnormal(self) -> float:
        return (self.min_exponent - self.precision_bits) * _LOG2

    @property
    def log_overflow_level(self) -> float:
        return math.log1p(-math.ldexp(1.0, -self.precision_bits)) \
            + (self.max_exponent + 1) * _LOG2


SINGLE = FloatSystem(precision_bits=23, min_exponent=-126, max_exponent=127)
DOUBLE = FloatSystem(precision_bits=52, min_exponent=-1022, max_exponent=1023)


def derived_levels(sys: FloatSystem) -> tuple[float, float, float]:
    """Return (B_SDN, B_UFL, B_OFL) for the given system."""
    return sys.smallest_subnormal, sys.underflow_level, sys.overflow_level


def parse_float_system(spec: str) -> FloatSystem:
    """Parse a CLI-style system description.

    Accepts ``single``, ``double`` or ``custom:P,L,U``.
    """
    if spec == "single":
        return SINGLE
    if spec == "double":
        return DOUBLE
    if spec.startswith("custom:"):
        parts = spec[len("custom:"):].split(",")
        if len(parts) != 3:
            raise DomainError(f"expected custom:P,L,U, got {spec!r}")
        try:
            p, lo, hi = (int(v) for v in parts)
        except ValueError as exc:
            raise DomainError(f"non-integer field in {spec!r}") from exc
        return FloatSystem(p, lo, hi)
    raise DomainError(f"unknown float system {spec!r}")
