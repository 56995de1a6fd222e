"""Time-value-of-money kernels: annuities, amortization, depreciation, PVs.

All operations are pure, stateless, and safe under concurrent use. Money
is plain binary floating point (this is a decision aid, not a ledger);
tests pin tolerances per invariant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import InvalidInputError
from .rates import RatePerPeriod

Money = float

KERNEL_BACKEND = _kernels.BACKEND


@dataclass(frozen=True)
class AmortizationRow:
    """One month of an amortizing loan; payment = interest + principal."""

    period_index: int
    payment: Money
    interest: Money
    principal: Money
    balance_after: Money


@dataclass(frozen=True)
class PaymentStream:
    """Ordered (period_index, amount) pairs with strictly increasing indices >= 1."""

    items: tuple[tuple[int, Money], ...]

    def __post_init__(self):
        last = 0
        for idx, amount in self.items:
            if idx <= last:
                raise InvalidInputError(
                    f"stream period indices must be strictly increasing and >= 1, "
                    f"got {idx} after {last}"
                )
            if not math.isfinite(amount):
                raise InvalidInputError(f"stream amount at period {idx} is not finite")
            last = idx

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, Money]]) -> "PaymentStream":
        return cls(tuple((int(i), float(a)) for i, a in pairs))

    def truncated(self, last_period: int) -> "PaymentStream":
        return PaymentStream(tuple(p for p in self.items if p[0] <= last_period))

    def __len__(self) -> int:
        return len(self.items)


def _monthly_value(rate: RatePerPeriod) -> float:
    return rate.as_monthly().value


def _check_loan_args(principal: Money, rate: RatePerPeriod, n_periods: int) -> float:
    if not (math.isfinite(principal) and principal > 0):
        raise InvalidInputError(f"principal must be positive, got {principal!r}")
    if n_periods < 1:
        raise InvalidInputError(f"n_periods must be >= 1, got {n_periods!r}")
    monthly = _monthly_value(rate)
    if monthly < 0:
        raise InvalidInputError(f"loan rate must be >= 0 per month, got {monthly!r}")
    return monthly


def annuity_payment(principal: Money, rate: RatePerPeriod, n_periods: int) -> Money:
    """Level monthly payment leaving a zero balance after `n_periods`.

    Zero rate degenerates to an equal split of the principal.
    """
    monthly = _check_loan_args(principal, rate, n_periods)
    return _kernels.annuity_payment(principal, monthly, n_periods)


def amortization_schedule(
    principal: Money, rate: RatePerPeriod, n_periods: int
) -> list[AmortizationRow]:
    """Month-by-month schedule; row k interest is balance-before times rate."""
    monthly = _check_loan_args(principal, rate, n_periods)
    pays, ints, prins, bals = _kernels.amortization_columns(principal, monthly, n_periods)
    # tolist() converts the kernel columns to plain Python floats so rows
    # serialize and compare identically under either backend.
    return [
        AmortizationRow(k + 1, pay, i, p, b)
        for k, (pay, i, p, b) in enumerate(
            zip(pays.tolist(), ints.tolist(), prins.tolist(), bals.tolist())
        )
    ]


def _check_discount(discount: RatePerPeriod) -> float:
    monthly = _monthly_value(discount)
    if monthly <= -1.0:
        raise InvalidInputError(f"discount must be > -1 per month, got {monthly!r}")
    return monthly


def pv_level_stream(payment: Money, discount: RatePerPeriod, n_periods: int) -> Money:
    """PV of `n_periods` equal end-of-month payments."""
    if n_periods < 1:
        raise InvalidInputError(f"n_periods must be >= 1, got {n_periods!r}")
    if not math.isfinite(payment):
        raise InvalidInputError("payment must be finite")
    monthly = _check_discount(discount)
    return _kernels.level_pv(payment, monthly, n_periods)


def pv_stream(stream: PaymentStream, discount: RatePerPeriod) -> Money:
    """PV of an arbitrary payment stream; empty stream is worth zero."""
    monthly = _check_discount(discount)
    if not stream.items:
        return 0.0
    indices = np.fromiter((i for i, _ in stream.items), dtype=np.int64, count=len(stream))
    amounts = np.fromiter((a for _, a in stream.items), dtype=np.float64, count=len(stream))
    return float(_kernels.stream_pv(indices, amounts, monthly))


def interest_pv(
    principal: Money, rate: RatePerPeriod, n_periods: int, discount: RatePerPeriod
) -> Money:
    """PV of the interest column of the amortizing loan, computed in one pass.

    Numerically identical to pv_stream over the schedule's interest column.
    """
    monthly = _check_loan_args(principal, rate, n_periods)
    disc = _check_discount(discount)
    return _kernels.interest_pv(principal, monthly, n_periods, disc)


def straight_line_depreciation(basis: Money, n_periods: int) -> PaymentStream:
    """Equal amounts basis/n at periods 1..n."""
    if n_periods < 1:
        raise InvalidInputError(f"n_periods must be >= 1, got {n_periods!r}")
    if not (math.isfinite(basis) and basis >= 0):
        raise InvalidInputError(f"basis must be >= 0, got {basis!r}")
    amount = basis / n_periods
    return PaymentStream(tuple((k, amount) for k in range(1, n_periods + 1)))


def depreciation_pv(
    basis: Money, life_periods: int, discount: RatePerPeriod, truncate_at: int
) -> Money:
    """PV of the straight-line stream, dropping periods past `truncate_at`."""
    stream = straight_line_depreciation(basis, life_periods).truncated(truncate_at)
    return pv_stream(stream, discount)


def schedule_interest_stream(schedule: Sequence[AmortizationRow]) -> PaymentStream:
    return PaymentStream(tuple((row.period_index, row.interest) for row in schedule))
