"""Sale-leaseback versus new-debt decision engine.

Evaluates the net position of selling a property and leasing it back
(capital or operating lease) against borrowing the same amount with an
amortizing loan, checks the thirteen published decision conditions with
per-condition margins, and ships breakeven/sweep/tornado tooling, a CLI,
and an HTTP service on top.
"""

from ._version import __version__
from .cashflow import (
    KERNEL_BACKEND,
    AmortizationRow,
    PaymentStream,
    amortization_schedule,
    annuity_payment,
    depreciation_pv,
    interest_pv,
    pv_level_stream,
    pv_stream,
    straight_line_depreciation,
)
from .curves import KNOWN_CURVE_NAMES, CurveSet, SampledCurve, d1, d3
from .deal import (
    CashflowSummary,
    DealParameters,
    LeaseClassification,
    ValidationFinding,
    derive_cashflows,
    validate,
)
from .engine import (
    ConditionResult,
    DecisionReport,
    NetPosition,
    Recommendation,
    eval_borrow_conditions,
    eval_slb_vs_nothing_conditions,
    evaluate,
    net_position_borrow,
    net_position_slb,
    net_position_slb_capital,
    net_position_slb_operating,
    recommend,
)
from .errors import (
    BracketError,
    ClassificationError,
    CurveCapabilityError,
    CurveDomainError,
    CurveError,
    DealValidationError,
    DecisionModelError,
    InvalidInputError,
    MissingCurveError,
    SchemaError,
    ScenarioSyntaxError,
)
from .rates import Period, RatePerPeriod
from .scenario import (
    ReportDocument,
    Scenario,
    ScenarioMeta,
    ScenarioOptions,
    build_report,
    load_scenario,
    parse_scenario,
    report_to_dict,
    report_to_json,
    run_batch,
    serialize_scenario,
)
from .sensitivity import (
    BreakevenResult,
    SweepRow,
    TornadoRow,
    breakeven,
    linear_grid,
    resolve_sweep_variable,
    sweep,
    tornado,
)

__all__ = [
    "__version__",
    "KERNEL_BACKEND",
    "AmortizationRow",
    "PaymentStream",
    "amortization_schedule",
    "annuity_payment",
    "depreciation_pv",
    "interest_pv",
    "pv_level_stream",
    "pv_stream",
    "straight_line_depreciation",
    "KNOWN_CURVE_NAMES",
    "CurveSet",
    "SampledCurve",
    "d1",
    "d3",
    "CashflowSummary",
    "DealParameters",
    "LeaseClassification",
    "ValidationFinding",
    "derive_cashflows",
    "validate",
    "ConditionResult",
    "DecisionReport",
    "NetPosition",
    "Recommendation",
    "eval_borrow_conditions",
    "eval_slb_vs_nothing_conditions",
    "evaluate",
    "net_position_borrow",
    "net_position_slb",
    "net_position_slb_capital",
    "net_position_slb_operating",
    "recommend",
    "BracketError",
    "ClassificationError",
    "CurveCapabilityError",
    "CurveDomainError",
    "CurveError",
    "DealValidationError",
    "DecisionModelError",
    "InvalidInputError",
    "MissingCurveError",
    "SchemaError",
    "ScenarioSyntaxError",
    "Period",
    "RatePerPeriod",
    "ReportDocument",
    "Scenario",
    "ScenarioMeta",
    "ScenarioOptions",
    "build_report",
    "load_scenario",
    "parse_scenario",
    "report_to_dict",
    "report_to_json",
    "run_batch",
    "serialize_scenario",
    "BreakevenResult",
    "SweepRow",
    "TornadoRow",
    "breakeven",
    "linear_grid",
    "resolve_sweep_variable",
    "sweep",
    "tornado",
]
