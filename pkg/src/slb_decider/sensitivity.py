"""Breakeven solving, parameter sweeps, and tornado rankings over the net positions.

These tools realize the Max-objective framing: they show where N_sl and N_b
cross and which inputs move the gap most. Solver probes may step outside the
documented bounds (a breakeven bracket can start at S = 0), so they evaluate
the formulas without re-running deal validation; sweeps validate per point
and record failures in-row instead.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .curves import CurveSet, SampledCurve, d1, d3  # re-exported for API coherence
from .deal import (
    PROBABILITY_FIELDS,
    SCALAR_FIELDS,
    DealParameters,
    derive_cashflows,
    validate,
    violations,
)
from .engine import (
    Recommendation,
    evaluate,
    net_position_borrow,
    net_position_slb,
)
from .errors import BracketError, InvalidInputError

__all__ = [
    "BREAKEVEN_VARIABLES",
    "BreakevenResult",
    "SweepRow",
    "TornadoRow",
    "breakeven",
    "resolve_sweep_variable",
    "sweep",
    "tornado",
    "linear_grid",
    "CurveSet",
    "SampledCurve",
    "d1",
    "d3",
]

# Symbol aliases accepted by breakeven, mapped to DealParameters fields.
BREAKEVEN_VARIABLES = {
    "S": "sale_price",
    "R_ts": "tax_rate_seller_lessee",
    "monthly_rent": "monthly_rent",
    "P_dss": "p_bankrupt_slb",
}

_SWEEP_ALIASES = {
    "S": "sale_price",
    "P": "loan_principal",
    "R_s": "implicit_lease_rate",
    "R_bb": "borrow_cost_before",
    "R_ba": "borrow_cost_after",
    "R_f": "firm_borrow_cost",
    "R_ts": "tax_rate_seller_lessee",
    "R_tb": "tax_rate_buyer_lessor",
    "R_sl": "txn_cost_slb",
    "R_ltc": "txn_cost_loan",
    "R_a": "leverage_benefit",
    "R_dlev": "leverage_penalty_rate",
    "DC": "debt_to_capital",
    "TC": "total_capital",
    "TV": "terminal_value_pv",
    "P_dss": "p_bankrupt_slb",
    "P_dsb": "p_bankrupt_borrow",
    "P_dls": "p_lessor_bankrupt_slb",
    "P_dlb": "p_lessor_bankrupt_borrow",
    "P_t": "p_taxable_income",
}

BREAKEVEN_TOL_SCALE = 1e-6
BREAKEVEN_MAX_ITERATIONS = 200


@dataclass(frozen=True)
class BreakevenResult:
    variable: str
    value: float
    residual: float
    iterations: int
    bracket: tuple[float, float]


@dataclass(frozen=True)
class SweepRow:
    x: float
    n_sl: Optional[float]
    n_b: Optional[float]
    recommendation: Optional[Recommendation]
    error: Optional[str] = None
    is_argmax_n_sl: bool = False
    is_argmax_n_b: bool = False


@dataclass(frozen=True)
class TornadoRow:
    parameter: str
    base: float
    x_down: float
    x_up: float
    delta_n_sl_down: float
    delta_n_sl_up: float
    delta_n_b_down: float
    delta_n_b_up: float
    delta_gap_down: float
    delta_gap_up: float

    @property
    def rank_key(self) -> float:
        return max(abs(self.delta_gap_down), abs(self.delta_gap_up))


def _resolve_field(variable: str, allowed: dict[str, str]) -> str:
    if variable in allowed:
        return allowed[variable]
    if variable in allowed.values():
        return variable
    raise InvalidInputError(
        f"unknown variable {variable!r}; expected one of {sorted(allowed)} "
        f"or a field name from {sorted(set(allowed.values()))}"
    )


def _net_values(params: DealParameters) -> tuple[float, float]:
    cf = derive_cashflows(params, include_schedules=False, check=False)
    return net_position_slb(cf, params).value, net_position_borrow(cf, params).value


def breakeven(
    params: DealParameters,
    variable: str,
    lo: float,
    hi: float,
    tol_scale: float = BREAKEVEN_TOL_SCALE,
    max_iterations: int = BREAKEVEN_MAX_ITERATIONS,
) -> BreakevenResult:
    """Bisect g(x) = N_sl(x) - N_b(x) to the indifference point of `variable`.

    Stops when |g| < tol_scale * max(1, |N_b|) or after max_iterations.
    Raises BracketError when g does not change sign over [lo, hi].
    """
    field_name = _resolve_field(variable, BREAKEVEN_VARIABLES)
    if not (np.isfinite(lo) and np.isfinite(hi)) or lo >= hi:
        raise InvalidInputError(f"bracket must satisfy lo < hi, got ({lo!r}, {hi!r})")
    if not (tol_scale > 0.0 and max_iterations >= 1):
        raise InvalidInputError("tol_scale must be > 0 and max_iterations >= 1")
    base = params.resolved()

    def g(x: float) -> tuple[float, float]:
        n_sl, n_b = _net_values(base.with_value(field_name, x))
        return n_sl - n_b, n_b

    g_lo, n_b_lo = g(lo)
    g_hi, n_b_hi = g(hi)
    if g_lo == 0.0:
        return BreakevenResult(variable, lo, g_lo, 0, (lo, hi))
    if g_hi == 0.0:
        return BreakevenResult(variable, hi, g_hi, 0, (lo, hi))
    if (g_lo > 0.0) == (g_hi > 0.0):
        raise BracketError(lo, hi, g_lo, g_hi)

    bracket = (lo, hi)
    mid = lo
    g_mid = g_lo
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        mid = 0.5 * (lo + hi)
        g_mid, n_b_mid = g(mid)
        if abs(g_mid) < tol_scale * max(1.0, abs(n_b_mid)):
            break
        if (g_mid > 0.0) == (g_lo > 0.0):
            lo = mid
            g_lo = g_mid
        else:
            hi = mid
    return BreakevenResult(variable, mid, g_mid, iterations, bracket)


def linear_grid(start: float, stop: float, steps: int) -> list[float]:
    if steps < 1:
        raise InvalidInputError(f"steps must be >= 1, got {steps}")
    if steps == 1:
        return [float(start)]
    return [float(x) for x in np.linspace(start, stop, steps)]


def resolve_sweep_variable(variable: str) -> str:
    """Map a sweep symbol or field name to its DealParameters field, or raise."""
    field_name = _resolve_field(variable, {**_SWEEP_ALIASES, **BREAKEVEN_VARIABLES})
    if field_name not in SCALAR_FIELDS:
        raise InvalidInputError(f"{field_name!r} is not a sweepable scalar field")
    return field_name


def sweep(
    params: DealParameters,
    curves: CurveSet,
    variable: str,
    grid: Sequence[float],
    fd_step_fraction: float | None = None,
) -> list[SweepRow]:
    """Evaluate the full decision at each grid point of `variable`, in grid order.

    Validation failures are recorded in-row rather than aborting the sweep;
    the argmax rows of N_sl and N_b are flagged (first point wins ties).
    """
    if len(grid) == 0:
        raise InvalidInputError("grid must be nonempty")
    field_name = resolve_sweep_variable(variable)
    base = params.resolved()

    rows: list[SweepRow] = []
    for x in grid:
        point = base.with_value(field_name, float(x))
        bad = violations(validate(point))
        if bad:
            msg = "; ".join(f"{f.field}: {f.message}" for f in bad)
            rows.append(SweepRow(float(x), None, None, None, error=msg))
            continue
        report = evaluate(point, curves, fd_step_fraction)
        rows.append(
            SweepRow(
                float(x),
                report.n_sl.value,
                report.n_b.value,
                report.recommendation,
            )
        )

    best_sl = None
    best_b = None
    for idx, row in enumerate(rows):
        if row.error is not None:
            continue
        if best_sl is None or row.n_sl > rows[best_sl].n_sl:
            best_sl = idx
        if best_b is None or row.n_b > rows[best_b].n_b:
            best_b = idx
    if best_sl is not None:
        rows[best_sl] = replace(rows[best_sl], is_argmax_n_sl=True)
    if best_b is not None:
        rows[best_b] = replace(rows[best_b], is_argmax_n_b=True)
    return rows


def tornado(
    params: DealParameters,
    perturbation: float = 0.10,
) -> list[TornadoRow]:
    """Perturb each continuous scalar by +-perturbation (relative) and rank the moves.

    Probabilities are clamped to [0, 1] after perturbation. Rows are ranked
    by the larger absolute change in the gap N_sl - N_b across the two
    directions, ties broken by parameter name.
    """
    if not perturbation > 0.0:
        raise InvalidInputError(f"perturbation must be > 0, got {perturbation!r}")
    base = params.resolved()
    n_sl0, n_b0 = _net_values(base)
    gap0 = n_sl0 - n_b0

    rows = []
    for name in SCALAR_FIELDS:
        value = getattr(base, name)
        x_down = value * (1.0 - perturbation)
        x_up = value * (1.0 + perturbation)
        if name in PROBABILITY_FIELDS:
            x_down = min(max(x_down, 0.0), 1.0)
            x_up = min(max(x_up, 0.0), 1.0)
        sl_down, b_down = _net_values(base.with_value(name, x_down))
        sl_up, b_up = _net_values(base.with_value(name, x_up))
        rows.append(
            TornadoRow(
                parameter=name,
                base=value,
                x_down=x_down,
                x_up=x_up,
                delta_n_sl_down=sl_down - n_sl0,
                delta_n_sl_up=sl_up - n_sl0,
                delta_n_b_down=b_down - n_b0,
                delta_n_b_up=b_up - n_b0,
                delta_gap_down=(sl_down - b_down) - gap0,
                delta_gap_up=(sl_up - b_up) - gap0,
            )
        )
    rows.sort(key=lambda r: (-r.rank_key, r.parameter))
    return rows
