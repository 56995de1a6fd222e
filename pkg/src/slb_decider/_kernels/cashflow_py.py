"""Pure-Python cashflow kernels.

Reference implementation of the hot loops; the compiled backend in
cashflow_cy.pyx performs the identical operation sequence on IEEE
doubles, so both backends produce bit-identical results.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def annuity_payment(principal: float, rate: float, n: int) -> float:
    """Level payment that amortizes `principal` to zero over `n` periods."""
    # Rates below one ulp of 1.0 make the closed-form denominator vanish.
    if 1.0 + rate == 1.0:
        return principal / n
    return principal * rate / (1.0 - (1.0 + rate) ** (-n))


def amortization_columns(principal: float, rate: float, n: int):
    """Columns (payment, interest, principal_part, balance_after) for the full schedule."""
    pay = annuity_payment(principal, rate, n)
    payments = np.empty(n)
    interest = np.empty(n)
    principal_part = np.empty(n)
    balance_after = np.empty(n)
    balance = principal
    for k in range(n):
        i_k = balance * rate
        p_k = pay - i_k
        balance = balance - p_k
        payments[k] = pay
        interest[k] = i_k
        principal_part[k] = p_k
        balance_after[k] = balance
    return payments, interest, principal_part, balance_after


def interest_pv(principal: float, rate: float, n: int, discount: float) -> float:
    """Present value of the interest column of the amortizing loan, in one pass."""
    pay = annuity_payment(principal, rate, n)
    inv = 1.0 / (1.0 + discount)
    df = 1.0
    balance = principal
    total = 0.0
    for _ in range(n):
        i_k = balance * rate
        balance = balance - (pay - i_k)
        df = df * inv
        total = total + i_k * df
    return total


def level_pv(payment: float, discount: float, n: int) -> float:
    """Present value of `n` equal end-of-period payments (closed form)."""
    if 1.0 + discount == 1.0:
        return payment * n
    return payment * (1.0 - (1.0 + discount) ** (-n)) / discount


def stream_pv(indices, amounts, discount: float) -> float:
    """Present value of (period_index, amount) pairs; indices strictly increasing >= 1.

    Discount factors are accumulated multiplicatively period by period so the
    result is numerically identical to discounting a dense schedule.
    """
    inv = 1.0 / (1.0 + discount)
    df = 1.0
    k = 0
    total = 0.0
    for idx, amount in zip(indices, amounts):
        while k < idx:
            df = df * inv
            k += 1
        total = total + amount * df
    return total
