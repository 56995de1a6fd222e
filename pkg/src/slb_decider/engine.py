"""Net-position formulas, the thirteen decision conditions, and the recommendation rule.

The formulas are evaluated verbatim, including their mixed-unit sums; where
the source inequalities use symbols the glossary never defines (R_r, R_i,
R_ab), the reading chosen here is echoed in the condition notes so users can
audit it. All inequalities are strict: a tie has margin 0 and does not hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .curves import CurveSet, SampledCurve, d1, d3
from .deal import (
    CashflowSummary,
    DealParameters,
    LeaseClassification,
    derive_cashflows,
    validate,
    violations,
)
from .errors import ClassificationError, DealValidationError

BORROW_CONDITION_IDS = ("B1", "B2", "B3", "B4", "B5", "B6")
SLB_CONDITION_IDS = ("S1", "S2", "S3", "S4", "S5", "S6", "S7")
ALL_CONDITION_IDS = BORROW_CONDITION_IDS + SLB_CONDITION_IDS

# Human-readable form of each inequality, as evaluated (UI tooltips quote these).
CONDITION_TEXT = {
    "B1": "Max{R_f(1-R_ts) + R_ltc*P + R_dlev*DC*TC, 0} < R_s(1-R_ts) - D*R_ts + R_sl*S",
    "B2": "N_b > N_sl",
    "B3": "Max{(R_ba - R_bb) - R_sl, 0} < R_ltc + R_dlev",
    "B4": "dR_f/dDC > Max{dR_dlev/dDC, 1}",
    "B5": "dR_s/dS > Max{dR_f/dP, 1}",
    "B6": "N_b > Max{N_sl, 0}",
    "S1": "S - L_s - R_sl*S - L_s*R_ts - r_a*DC*TC + TV*(1-P_dss) > 0",
    "S2": "dR_f/dDC > Max{dR_dlev/dDC, 1}",
    "S3": "dr_a/dDC > Max{dR_dlev/dDC, 1}",
    "S4": "R_s*R_ts < R_bb*R_ts",
    "S5": "dR_bb/dDC > Max{dR_ba/dDC, 1} and d3R_bb/dDC3 > Max{d3R_ba/dDC3, 1}",
    "S6": "Max{dP_dss/dDC, 1} < dR_bb/dDC and Max{d3P_dss/dDC3, 1} < d3R_bb/dDC3",
    "S7": "Max{dP_dss/dR_bb, 1} < dP_dss/dR_f and Max{d3P_dss/dR_bb3, 1} < d3P_dss/dR_f3",
}

_UNITS_NOTE = (
    "mixed units: rate-valued and currency-valued terms are summed verbatim; "
    "read the margin as a diagnostic score, not a currency amount"
)


class Recommendation(Enum):
    BORROW = "Borrow"
    SALE_LEASEBACK = "SaleLeaseback"
    NO_ACTION = "NoAction"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class NetPosition:
    """A net position with an additive component breakdown.

    The components are already survival-scaled, so they sum to `value`
    (within float reassociation error); `survival_factor` is carried for
    display only.
    """

    value: float
    components: Mapping[str, float]
    survival_factor: float
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class ConditionResult:
    """One evaluated inequality, oriented so that holds <=> margin > 0.

    For two-clause conditions (S5, S6, S7) the margin is the minimum of the
    clause margins and lhs/rhs echo the binding clause; both clauses appear
    in inputs_echo.
    """

    id: str
    holds: bool
    lhs: float
    rhs: float
    margin: float
    inputs_echo: Mapping[str, float]
    text: str
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class DecisionReport:
    n_sl: NetPosition
    n_b: NetPosition
    conditions: tuple[ConditionResult, ...]
    recommendation: Recommendation
    failed_conditions: tuple[str, ...]
    warnings: tuple[str, ...] = ()

    def condition(self, cid: str) -> ConditionResult:
        for cond in self.conditions:
            if cond.id == cid:
                return cond
        raise KeyError(cid)


def net_position_slb_capital(cf: CashflowSummary, p: DealParameters) -> NetPosition:
    """N_sl for a capital lease.

    N_sl = S(1-R_sl) + ((L_s*R_ts) + (D*R_ts*P_t) - L_s + R_a + TV) * (1-P_dss)
    """
    if p.classification is not LeaseClassification.CAPITAL:
        raise ClassificationError(
            f"expected capital classification, got {p.classification.value!r}"
        )
    s = p.sale_price
    l_s = cf.lease_pv
    d = cf.depreciation_pv
    tv = cf.terminal_value_pv
    survival = 1.0 - p.p_bankrupt_slb
    value = s * (1.0 - p.txn_cost_slb) + (
        (l_s * p.tax_rate_seller_lessee)
        + (d * p.tax_rate_seller_lessee * p.p_taxable_income)
        - l_s
        + p.leverage_benefit
        + tv
    ) * survival
    components = {
        "gross_proceeds": s,
        "transaction_cost": -(p.txn_cost_slb * s),
        "rent_tax_shield": (l_s * p.tax_rate_seller_lessee) * survival,
        "depreciation_tax_shield": (d * p.tax_rate_seller_lessee * p.p_taxable_income)
        * survival,
        "rent_burden": -l_s * survival,
        "leverage_benefit": p.leverage_benefit * survival,
        "terminal_value": tv * survival,
    }
    notes = (
        "leverage_benefit (R_a) enters as a present-value currency amount here; "
        "the glossary annotates it as an operating-lease effect, and the rate "
        "reading r_a appears separately in condition S1",
    )
    return NetPosition(value=value, components=components, survival_factor=survival, notes=notes)


def net_position_slb_operating(cf: CashflowSummary, p: DealParameters) -> NetPosition:
    """N_sl for an operating lease: no depreciation tax benefit, no terminal value.

    N_sl = S(1-R_sl) + ((L_s*R_ts) - L_s + R_a) * (1-P_dss)
    """
    if p.classification is not LeaseClassification.OPERATING:
        raise ClassificationError(
            f"expected operating classification, got {p.classification.value!r}"
        )
    s = p.sale_price
    l_s = cf.lease_pv
    survival = 1.0 - p.p_bankrupt_slb
    value = s * (1.0 - p.txn_cost_slb) + (
        (l_s * p.tax_rate_seller_lessee) - l_s + p.leverage_benefit
    ) * survival
    components = {
        "gross_proceeds": s,
        "transaction_cost": -(p.txn_cost_slb * s),
        "rent_tax_shield": (l_s * p.tax_rate_seller_lessee) * survival,
        "rent_burden": -l_s * survival,
        "leverage_benefit": p.leverage_benefit * survival,
    }
    differential = p.tax_rate_seller_lessee - p.tax_rate_buyer_lessor
    notes = [
        "operating-lease viability tracks the seller/buyer tax-rate differential "
        f"R_ts - R_tb = {differential!r}"
    ]
    if differential == 0.0:
        notes.append("no tax-rate differential")
    return NetPosition(
        value=value, components=components, survival_factor=survival, notes=tuple(notes)
    )


def net_position_slb(cf: CashflowSummary, p: DealParameters) -> NetPosition:
    if p.classification is LeaseClassification.CAPITAL:
        return net_position_slb_capital(cf, p)
    return net_position_slb_operating(cf, p)


def net_position_borrow(cf: CashflowSummary, p: DealParameters) -> NetPosition:
    """N_b for borrowing P against the property.

    N_b = P(1-R_ltc) + ((I*R_ts) - (R_dlev*DC*TC) + (R_ts*R_dlev*DC*TC)
          - I(1-R_ts)) * (1-P_dsb)

    The printed formula writes R_i for both roles; the transaction-cost role
    is read as txn_cost_loan and the leverage-rate role as
    leverage_penalty_rate.
    """
    principal = p.loan_principal
    i = cf.interest_pv
    penalty = p.leverage_penalty_rate * p.debt_to_capital * p.total_capital
    survival = 1.0 - p.p_bankrupt_borrow
    value = principal * (1.0 - p.txn_cost_loan) + (
        (i * p.tax_rate_seller_lessee)
        - penalty
        + (p.tax_rate_seller_lessee * penalty)
        - i * (1.0 - p.tax_rate_seller_lessee)
    ) * survival
    components = {
        "gross_proceeds": principal,
        "transaction_cost": -(p.txn_cost_loan * principal),
        "interest_tax_shield": (i * p.tax_rate_seller_lessee) * survival,
        "leverage_penalty": (-penalty + (p.tax_rate_seller_lessee * penalty)) * survival,
        "interest_burden": -(i * (1.0 - p.tax_rate_seller_lessee)) * survival,
    }
    notes = (
        "R_i read as txn_cost_loan in the proceeds term and as "
        "leverage_penalty_rate in the DC*TC terms",
    )
    return NetPosition(value=value, components=components, survival_factor=survival, notes=notes)


def _condition(
    cid: str,
    lhs: float,
    rhs: float,
    inputs_echo: Mapping[str, float],
    notes: tuple[str, ...] = (),
) -> ConditionResult:
    margin = rhs - lhs
    return ConditionResult(
        id=cid,
        holds=margin > 0.0,
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        inputs_echo=dict(inputs_echo),
        text=CONDITION_TEXT[cid],
        notes=notes,
    )


def _and_condition(
    cid: str,
    clauses: list[tuple[float, float]],
    inputs_echo: Mapping[str, float],
    notes: tuple[str, ...] = (),
) -> ConditionResult:
    # Binding clause = smallest margin; first wins a tie for determinism.
    margins = [rhs - lhs for lhs, rhs in clauses]
    k = min(range(len(clauses)), key=lambda j: margins[j])
    lhs, rhs = clauses[k]
    return ConditionResult(
        id=cid,
        holds=margins[k] > 0.0,
        lhs=lhs,
        rhs=rhs,
        margin=margins[k],
        inputs_echo=dict(inputs_echo),
        text=CONDITION_TEXT[cid],
        notes=notes,
    )


def _step_for(curve: SampledCurve, fd_step_fraction: float | None) -> float | None:
    if fd_step_fraction is None:
        return None
    return curve.span * fd_step_fraction


def _d1_at(
    curves: CurveSet, name: str, x: float, needed_for: str, fd_step_fraction: float | None
) -> float:
    curve = curves.require(name, needed_for)
    return d1(curve, x, _step_for(curve, fd_step_fraction))


def _d3_at(
    curves: CurveSet, name: str, x: float, needed_for: str, fd_step_fraction: float | None
) -> float:
    curve = curves.require(name, needed_for)
    return d3(curve, x, _step_for(curve, fd_step_fraction))


def eval_borrow_conditions(
    cf: CashflowSummary,
    p: DealParameters,
    curves: CurveSet,
    fd_step_fraction: float | None = None,
) -> list[ConditionResult]:
    """Evaluate B1..B6, the conditions for preferring borrowing over the sale-leaseback."""
    p = p.resolved()
    n_sl = net_position_slb(cf, p)
    n_b = net_position_borrow(cf, p)
    dc = p.debt_to_capital
    results = []

    lhs = max(
        p.firm_borrow_cost * (1.0 - p.tax_rate_seller_lessee)
        + p.txn_cost_loan * p.loan_principal
        + p.leverage_penalty_rate * dc * p.total_capital,
        0.0,
    )
    rhs = (
        p.implicit_lease_rate * (1.0 - p.tax_rate_seller_lessee)
        - cf.depreciation_pv * p.tax_rate_seller_lessee
        + p.txn_cost_slb * p.sale_price
    )
    results.append(
        _condition(
            "B1",
            lhs,
            rhs,
            {
                "R_f": p.firm_borrow_cost,
                "R_ts": p.tax_rate_seller_lessee,
                "R_ltc": p.txn_cost_loan,
                "P": p.loan_principal,
                "R_dlev": p.leverage_penalty_rate,
                "DC": dc,
                "TC": p.total_capital,
                "R_s": p.implicit_lease_rate,
                "D": cf.depreciation_pv,
                "R_sl": p.txn_cost_slb,
                "S": p.sale_price,
            },
            notes=(_UNITS_NOTE, "R_r read as firm_borrow_cost (R_f)"),
        )
    )

    results.append(
        _condition("B2", n_sl.value, n_b.value, {"N_sl": n_sl.value, "N_b": n_b.value})
    )

    spread = (p.borrow_cost_after - p.borrow_cost_before) - p.txn_cost_slb
    results.append(
        _condition(
            "B3",
            max(spread, 0.0),
            p.txn_cost_loan + p.leverage_penalty_rate,
            {
                "R_ba": p.borrow_cost_after,
                "R_bb": p.borrow_cost_before,
                "R_sl": p.txn_cost_slb,
                "R_ltc": p.txn_cost_loan,
                "R_dlev": p.leverage_penalty_rate,
            },
            notes=(
                "printed as R_i + R_i; evaluated as txn_cost_loan + leverage_penalty_rate; "
                f"the alternative reading 2*txn_cost_loan = {2.0 * p.txn_cost_loan!r}",
            ),
        )
    )

    d1_rf = _d1_at(curves, "R_f_of_DC", dc, "B4", fd_step_fraction)
    d1_rdlev = _d1_at(curves, "R_dlev_of_DC", dc, "B4", fd_step_fraction)
    results.append(
        _condition(
            "B4",
            max(d1_rdlev, 1.0),
            d1_rf,
            {"d1_R_f_of_DC": d1_rf, "d1_R_dlev_of_DC": d1_rdlev, "DC": dc},
            notes=("dR_i/dDC read as the leverage_penalty_rate curve",),
        )
    )

    d1_rs = _d1_at(curves, "R_s_of_S", p.sale_price, "B5", fd_step_fraction)
    d1_rf_p = _d1_at(curves, "R_f_of_P", p.loan_principal, "B5", fd_step_fraction)
    results.append(
        _condition(
            "B5",
            max(d1_rf_p, 1.0),
            d1_rs,
            {
                "d1_R_s_of_S": d1_rs,
                "d1_R_f_of_P": d1_rf_p,
                "S": p.sale_price,
                "P": p.loan_principal,
            },
        )
    )

    results.append(
        _condition(
            "B6",
            max(n_sl.value, 0.0),
            n_b.value,
            {"N_sl": n_sl.value, "N_b": n_b.value},
            notes=("evaluated independently of B2; both are listed",),
        )
    )
    return results


def eval_slb_vs_nothing_conditions(
    cf: CashflowSummary,
    p: DealParameters,
    curves: CurveSet,
    fd_step_fraction: float | None = None,
) -> list[ConditionResult]:
    """Evaluate S1..S7, the conditions for preferring the sale-leaseback over doing nothing."""
    p = p.resolved()
    dc = p.debt_to_capital
    results = []

    r_a_rate = curves.require("r_a_of_DC", "S1").value(dc)
    s1_expr = (
        p.sale_price
        - cf.lease_pv
        - p.txn_cost_slb * p.sale_price
        - cf.lease_pv * p.tax_rate_seller_lessee
        - r_a_rate * dc * p.total_capital
        + cf.terminal_value_pv * (1.0 - p.p_bankrupt_slb)
    )
    results.append(
        _condition(
            "S1",
            0.0,
            s1_expr,
            {
                "S": p.sale_price,
                "L_s": cf.lease_pv,
                "R_sl": p.txn_cost_slb,
                "R_ts": p.tax_rate_seller_lessee,
                "r_a": r_a_rate,
                "DC": dc,
                "TC": p.total_capital,
                "TV": cf.terminal_value_pv,
                "P_dss": p.p_bankrupt_slb,
            },
            notes=(
                _UNITS_NOTE,
                "r_a is the leverage-benefit rate from curve r_a_of_DC at the deal's DC, "
                "distinct from the currency-valued leverage_benefit used in N_sl",
            ),
        )
    )

    d1_rf = _d1_at(curves, "R_f_of_DC", dc, "S2", fd_step_fraction)
    d1_rdlev = _d1_at(curves, "R_dlev_of_DC", dc, "S2", fd_step_fraction)
    results.append(
        _condition(
            "S2",
            max(d1_rdlev, 1.0),
            d1_rf,
            {"d1_R_f_of_DC": d1_rf, "d1_R_dlev_of_DC": d1_rdlev, "DC": dc},
            notes=("same inequality as B4, listed in both sets",),
        )
    )

    d1_ra = _d1_at(curves, "r_a_of_DC", dc, "S3", fd_step_fraction)
    results.append(
        _condition(
            "S3",
            max(d1_rdlev, 1.0),
            d1_ra,
            {"d1_r_a_of_DC": d1_ra, "d1_R_dlev_of_DC": d1_rdlev, "DC": dc},
        )
    )

    results.append(
        _condition(
            "S4",
            p.implicit_lease_rate * p.tax_rate_seller_lessee,
            p.borrow_cost_before * p.tax_rate_seller_lessee,
            {
                "R_s": p.implicit_lease_rate,
                "R_bb": p.borrow_cost_before,
                "R_ts": p.tax_rate_seller_lessee,
            },
        )
    )

    d1_rbb = _d1_at(curves, "R_bb_of_DC", dc, "S5", fd_step_fraction)
    d1_rba = _d1_at(curves, "R_ba_of_DC", dc, "S5", fd_step_fraction)
    d3_rbb = _d3_at(curves, "R_bb_of_DC", dc, "S5", fd_step_fraction)
    d3_rba = _d3_at(curves, "R_ba_of_DC", dc, "S5", fd_step_fraction)
    results.append(
        _and_condition(
            "S5",
            [(max(d1_rba, 1.0), d1_rbb), (max(d3_rba, 1.0), d3_rbb)],
            {
                "d1_R_bb_of_DC": d1_rbb,
                "d1_R_ba_of_DC": d1_rba,
                "d3_R_bb_of_DC": d3_rbb,
                "d3_R_ba_of_DC": d3_rba,
                "DC": dc,
            },
            notes=("R_ab read as borrow_cost_after (R_ba)",),
        )
    )

    d1_pdss = _d1_at(curves, "P_dss_of_DC", dc, "S6", fd_step_fraction)
    d3_pdss = _d3_at(curves, "P_dss_of_DC", dc, "S6", fd_step_fraction)
    results.append(
        _and_condition(
            "S6",
            [(max(d1_pdss, 1.0), d1_rbb), (max(d3_pdss, 1.0), d3_rbb)],
            {
                "d1_P_dss_of_DC": d1_pdss,
                "d1_R_bb_of_DC": d1_rbb,
                "d3_P_dss_of_DC": d3_pdss,
                "d3_R_bb_of_DC": d3_rbb,
                "DC": dc,
            },
        )
    )

    d1_pdss_rbb = _d1_at(
        curves, "P_dss_of_Rbb", p.borrow_cost_before, "S7", fd_step_fraction
    )
    d1_pdss_rf = _d1_at(curves, "P_dss_of_Rf", p.firm_borrow_cost, "S7", fd_step_fraction)
    d3_pdss_rbb = _d3_at(
        curves, "P_dss_of_Rbb", p.borrow_cost_before, "S7", fd_step_fraction
    )
    d3_pdss_rf = _d3_at(curves, "P_dss_of_Rf", p.firm_borrow_cost, "S7", fd_step_fraction)
    results.append(
        _and_condition(
            "S7",
            [
                (max(d1_pdss_rbb, 1.0), d1_pdss_rf),
                (max(d3_pdss_rbb, 1.0), d3_pdss_rf),
            ],
            {
                "d1_P_dss_of_Rbb": d1_pdss_rbb,
                "d1_P_dss_of_Rf": d1_pdss_rf,
                "d3_P_dss_of_Rbb": d3_pdss_rbb,
                "d3_P_dss_of_Rf": d3_pdss_rf,
                "R_bb": p.borrow_cost_before,
                "R_f": p.firm_borrow_cost,
            },
            notes=(
                "P_dss_of_Rbb evaluated at the deal's borrow_cost_before, "
                "P_dss_of_Rf at the deal's firm_borrow_cost",
            ),
        )
    )
    return results


def recommend(
    n_sl: NetPosition,
    n_b: NetPosition,
    conditions: list[ConditionResult],
    warnings: tuple[str, ...] = (),
) -> DecisionReport:
    """Fold the thirteen conditions and the two net positions into a recommendation.

    Borrow if B1..B6 all hold; else SaleLeaseback if S1..S7 all hold; else
    NoAction if both sets have a failure and neither net position is
    positive; else Indeterminate. Borrowing takes precedence because the
    B-set compares the two transactions directly.
    """
    by_id = {c.id: c for c in conditions}
    missing = [cid for cid in ALL_CONDITION_IDS if cid not in by_id]
    if missing:
        raise ValueError(f"conditions missing from report inputs: {missing}")
    failed = tuple(cid for cid in ALL_CONDITION_IDS if not by_id[cid].holds)
    b_ok = all(by_id[cid].holds for cid in BORROW_CONDITION_IDS)
    s_ok = all(by_id[cid].holds for cid in SLB_CONDITION_IDS)
    if b_ok:
        rec = Recommendation.BORROW
    elif s_ok:
        rec = Recommendation.SALE_LEASEBACK
    elif n_sl.value <= 0.0 and n_b.value <= 0.0:
        rec = Recommendation.NO_ACTION
    else:
        rec = Recommendation.INDETERMINATE
    ordered = tuple(by_id[cid] for cid in ALL_CONDITION_IDS)
    return DecisionReport(
        n_sl=n_sl,
        n_b=n_b,
        conditions=ordered,
        recommendation=rec,
        failed_conditions=failed,
        warnings=warnings,
    )


def evaluate(
    params: DealParameters,
    curves: CurveSet | None = None,
    fd_step_fraction: float | None = None,
    cf: CashflowSummary | None = None,
) -> DecisionReport:
    """Validate, derive cashflows, evaluate all conditions, and recommend.

    `cf` lets callers that already derived the cashflow summary skip the
    recompute; it must come from the same params.
    """
    params = params.resolved()
    findings = validate(params)
    bad = violations(findings)
    if bad:
        raise DealValidationError(bad)
    warnings = tuple(f"{f.field}: {f.message}" for f in findings)
    if curves is None:
        curves = CurveSet.empty()
    if cf is None:
        cf = derive_cashflows(params, include_schedules=False)
    n_sl = net_position_slb(cf, params)
    n_b = net_position_borrow(cf, params)
    conditions = eval_borrow_conditions(cf, params, curves, fd_step_fraction)
    conditions += eval_slb_vs_nothing_conditions(cf, params, curves, fd_step_fraction)
    if (
        params.classification is LeaseClassification.OPERATING
        and params.tax_rate_seller_lessee == params.tax_rate_buyer_lessor
    ):
        warnings += ("no tax-rate differential between seller-lessee and buyer-lessor",)
    return recommend(n_sl, n_b, conditions, warnings)
