"""Per-period rate handling.

Annual rates convert to monthly nominally (annual / 12), the loan-market
convention for monthly-pay instruments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidInputError


class Period(Enum):
    MONTHLY = "monthly"
    ANNUAL = "annual"


@dataclass(frozen=True)
class RatePerPeriod:
    """A dimensionless fraction per compounding period."""

    value: float
    period: Period

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise InvalidInputError(f"rate must be finite, got {self.value!r}")
        if self.value <= -1.0:
            raise InvalidInputError(f"rate must be > -1, got {self.value!r}")

    @classmethod
    def monthly(cls, value: float) -> "RatePerPeriod":
        return cls(float(value), Period.MONTHLY)

    @classmethod
    def annual(cls, value: float) -> "RatePerPeriod":
        return cls(float(value), Period.ANNUAL)

    def as_monthly(self) -> "RatePerPeriod":
        """Nominal conversion: annual value / 12."""
        if self.period is Period.MONTHLY:
            return self
        return RatePerPeriod(self.value / 12.0, Period.MONTHLY)
