"""Deal parameters, validation, and derived cashflow summary.

A deal bundles every scalar the decision formulas consume. Rates are
stored as annual fractions and converted nominally (value/12) where a
monthly rate is needed. Hard bound violations block evaluation; values
sitting exactly on an open bound (0 or 1) are reported as warnings so
limit cases stay evaluable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace
from enum import Enum
from typing import Optional

from .cashflow import (
    AmortizationRow,
    Money,
    PaymentStream,
    amortization_schedule,
    depreciation_pv,
    interest_pv,
    pv_level_stream,
    straight_line_depreciation,
)
from .errors import DealValidationError
from .rates import RatePerPeriod


class LeaseClassification(Enum):
    CAPITAL = "capital"
    OPERATING = "operating"


@dataclass(frozen=True)
class ValidationFinding:
    level: str  # "violation" | "warning"
    field: str
    message: str


@dataclass(frozen=True)
class DealParameters:
    """Scalar inputs for one deal.

    Symbol aliases used in reports and docs:
      sale_price S, loan_principal P, implicit_lease_rate R_s,
      borrow_cost_before R_bb, borrow_cost_after R_ba, firm_borrow_cost R_f,
      tax_rate_seller_lessee R_ts, tax_rate_buyer_lessor R_tb,
      txn_cost_slb R_sl, txn_cost_loan R_ltc, leverage_benefit R_a (PV currency),
      leverage_penalty_rate R_dlev, debt_to_capital DC, total_capital TC,
      terminal_value_pv TV, p_bankrupt_slb P_dss, p_bankrupt_borrow P_dsb,
      p_lessor_bankrupt_slb P_dls, p_lessor_bankrupt_borrow P_dlb,
      p_taxable_income P_t.
    """

    sale_price: Money
    loan_principal: Money
    monthly_rent: Money
    term_months: int
    implicit_lease_rate: float
    borrow_cost_before: float
    borrow_cost_after: float
    firm_borrow_cost: float
    tax_rate_seller_lessee: float
    tax_rate_buyer_lessor: float
    txn_cost_slb: float
    txn_cost_loan: float
    leverage_benefit: Money
    leverage_penalty_rate: float
    debt_to_capital: float
    total_capital: Money
    terminal_value_pv: Money
    p_bankrupt_slb: float
    p_bankrupt_borrow: float
    p_lessor_bankrupt_slb: float
    p_lessor_bankrupt_borrow: float
    p_taxable_income: float
    classification: LeaseClassification
    depreciation_basis: Optional[Money] = None
    depreciation_life_months: Optional[int] = None
    discount_rate: Optional[float] = None

    def resolved(self) -> "DealParameters":
        """Materialize defaults: basis <- sale_price, life <- term, discount <- borrow_cost_after."""
        return replace(
            self,
            depreciation_basis=(
                self.sale_price if self.depreciation_basis is None else self.depreciation_basis
            ),
            depreciation_life_months=(
                self.term_months
                if self.depreciation_life_months is None
                else self.depreciation_life_months
            ),
            discount_rate=(
                self.borrow_cost_after if self.discount_rate is None else self.discount_rate
            ),
        )

    def with_value(self, field_name: str, value: float) -> "DealParameters":
        return replace(self, **{field_name: value})


# Fields grouped by the bound they must respect.
RATE_FIELDS = (
    "implicit_lease_rate",
    "borrow_cost_before",
    "borrow_cost_after",
    "firm_borrow_cost",
    "tax_rate_seller_lessee",
    "tax_rate_buyer_lessor",
    "txn_cost_slb",
    "txn_cost_loan",
    "leverage_penalty_rate",
    "discount_rate",
)
PROBABILITY_FIELDS = (
    "p_bankrupt_slb",
    "p_bankrupt_borrow",
    "p_lessor_bankrupt_slb",
    "p_lessor_bankrupt_borrow",
    "p_taxable_income",
)
POSITIVE_FIELDS = ("sale_price", "loan_principal", "total_capital")
NONNEGATIVE_FIELDS = ("monthly_rent", "terminal_value_pv", "depreciation_basis")

# Continuous scalars eligible for tornado perturbation and sweeps.
SCALAR_FIELDS = (
    "sale_price",
    "loan_principal",
    "monthly_rent",
    "implicit_lease_rate",
    "borrow_cost_before",
    "borrow_cost_after",
    "firm_borrow_cost",
    "tax_rate_seller_lessee",
    "tax_rate_buyer_lessor",
    "txn_cost_slb",
    "txn_cost_loan",
    "leverage_benefit",
    "leverage_penalty_rate",
    "debt_to_capital",
    "total_capital",
    "terminal_value_pv",
    "p_bankrupt_slb",
    "p_bankrupt_borrow",
    "p_lessor_bankrupt_slb",
    "p_lessor_bankrupt_borrow",
    "p_taxable_income",
    "depreciation_basis",
    "discount_rate",
)


def _check_unit_interval(name: str, value: float, findings: list[ValidationFinding]) -> None:
    if not math.isfinite(value):
        findings.append(ValidationFinding("violation", name, "must be finite"))
    elif value < 0.0 or value > 1.0:
        findings.append(ValidationFinding("violation", name, f"out of (0,1): {value!r}"))
    elif value == 0.0 or value == 1.0:
        findings.append(ValidationFinding("warning", name, f"at strict bound: {value!r}"))


def validate(params: DealParameters) -> list[ValidationFinding]:
    """Check every parameter bound; violations block evaluation, warnings do not."""
    p = params.resolved()
    findings: list[ValidationFinding] = []

    for name in RATE_FIELDS:
        _check_unit_interval(name, getattr(p, name), findings)
    for name in PROBABILITY_FIELDS:
        _check_unit_interval(name, getattr(p, name), findings)
    _check_unit_interval("debt_to_capital", p.debt_to_capital, findings)

    for name in POSITIVE_FIELDS:
        value = getattr(p, name)
        if not (math.isfinite(value) and value > 0):
            findings.append(ValidationFinding("violation", name, f"must be > 0, got {value!r}"))
    for name in NONNEGATIVE_FIELDS:
        value = getattr(p, name)
        if not (math.isfinite(value) and value >= 0):
            findings.append(ValidationFinding("violation", name, f"must be >= 0, got {value!r}"))

    if not math.isfinite(p.leverage_benefit):
        findings.append(ValidationFinding("violation", "leverage_benefit", "must be finite"))
    if p.term_months < 1:
        findings.append(
            ValidationFinding("violation", "term_months", f"must be >= 1, got {p.term_months!r}")
        )
    if p.depreciation_life_months < 1:
        findings.append(
            ValidationFinding(
                "violation",
                "depreciation_life_months",
                f"must be >= 1, got {p.depreciation_life_months!r}",
            )
        )
    return findings


def violations(findings: list[ValidationFinding]) -> list[ValidationFinding]:
    return [f for f in findings if f.level == "violation"]


@dataclass(frozen=True)
class CashflowSummary:
    """Derived present values consumed by the decision formulas.

    lease_pv L_s, interest_pv I, depreciation_pv D, terminal_value_pv TV.
    Schedules are carried for report drill-down and omitted on hot paths.
    """

    lease_pv: Money
    interest_pv: Money
    depreciation_pv: Money
    terminal_value_pv: Money
    amortization: Optional[list[AmortizationRow]] = None
    depreciation: Optional[PaymentStream] = None


def derive_cashflows(
    params: DealParameters, include_schedules: bool = True, check: bool = True
) -> CashflowSummary:
    """Compute L_s, I, D at the deal's monthly discount; TV passes through as given.

    Raises DealValidationError if any hard bound is violated. `check=False`
    skips that gate for solver probes that step outside the bounds (breakeven
    brackets, tornado perturbations); the kernels still reject inputs they
    cannot price.
    """
    if check:
        findings = validate(params)
        if violations(findings):
            raise DealValidationError(findings)
    p = params.resolved()

    discount = RatePerPeriod.annual(p.discount_rate)
    loan_rate = RatePerPeriod.annual(p.firm_borrow_cost)

    lease_pv = pv_level_stream(p.monthly_rent, discount, p.term_months)
    i_pv = interest_pv(p.loan_principal, loan_rate, p.term_months, discount)
    d_pv = depreciation_pv(
        p.depreciation_basis, p.depreciation_life_months, discount, p.term_months
    )

    amortization = None
    depreciation = None
    if include_schedules:
        amortization = amortization_schedule(p.loan_principal, loan_rate, p.term_months)
        depreciation = straight_line_depreciation(
            p.depreciation_basis, p.depreciation_life_months
        ).truncated(p.term_months)

    return CashflowSummary(
        lease_pv=lease_pv,
        interest_pv=i_pv,
        depreciation_pv=d_pv,
        terminal_value_pv=p.terminal_value_pv,
        amortization=amortization,
        depreciation=depreciation,
    )


def deal_field_names() -> tuple[str, ...]:
    return tuple(f.name for f in fields(DealParameters))
