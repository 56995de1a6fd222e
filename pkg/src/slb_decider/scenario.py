"""Scenario JSON (schema v1), report documents, and batch evaluation.

The schema is strict: unknown fields are rejected with the offending path,
so a misspelled symbol fails loudly instead of silently falling back to a
default. Parsing materializes the documented defaults (depreciation basis
from the sale price, depreciation life from the term, discount rate from the
post-transaction borrowing cost), so serialize(parse(text)) is the canonical
form and parse(serialize(scenario)) is the identity.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import TYPE_CHECKING, Any, Optional

if TYPE_CHECKING:
    from .sensitivity import BreakevenResult, SweepRow, TornadoRow

from ._version import __version__
from .curves import INTERPOLATIONS, KNOWN_CURVE_NAMES, CurveSet, SampledCurve
from .deal import (
    CashflowSummary,
    DealParameters,
    LeaseClassification,
    deal_field_names,
    derive_cashflows,
    validate,
    violations,
)
from .engine import (
    ALL_CONDITION_IDS,
    ConditionResult,
    DecisionReport,
    NetPosition,
    evaluate,
)
from .errors import (
    DecisionModelError,
    DealValidationError,
    InvalidInputError,
    SchemaError,
    ScenarioSyntaxError,
)

SCHEMA_VERSION = "1"

_TOP_KEYS = ("schema_version", "meta", "deal", "curves", "options")
_META_KEYS = ("name", "lifecycle_stage", "notes")
_OPTIONS_KEYS = ("mode", "fd_step_fraction", "breakeven_tol", "breakeven_max_iterations")
_CURVE_KEYS = ("interpolation", "xs", "ys")
_INT_DEAL_FIELDS = ("term_months", "depreciation_life_months")
_OPTIONAL_DEAL_FIELDS = ("depreciation_basis", "depreciation_life_months", "discount_rate")

CSV_HEADER = (
    "scenario_name,N_sl,N_b,B1,B2,B3,B4,B5,B6,S1,S2,S3,S4,S5,S6,S7,recommendation"
)


@dataclass(frozen=True)
class ScenarioMeta:
    name: str = "unnamed"
    lifecycle_stage: str = ""
    notes: str = ""


@dataclass(frozen=True)
class ScenarioOptions:
    mode: str = "verbatim"
    fd_step_fraction: Optional[float] = None
    breakeven_tol: float = 1e-6
    breakeven_max_iterations: int = 200


@dataclass(frozen=True)
class Scenario:
    deal: DealParameters
    curves: CurveSet
    meta: ScenarioMeta = ScenarioMeta()
    options: ScenarioOptions = ScenarioOptions()
    schema_version: str = SCHEMA_VERSION


def _reject_constant(token: str):
    raise SchemaError("$", f"non-finite number literal {token!r} is not allowed")


def _object(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(path, f"expected an object, got {type(value).__name__}")
    return value


def _reject_unknown(obj: dict, allowed: tuple[str, ...], path: str) -> None:
    unknown = [k for k in obj if k not in allowed]
    if unknown:
        raise SchemaError(
            f"{path}.{unknown[0]}" if path else unknown[0],
            f"unknown field (allowed: {', '.join(allowed)})",
        )


def _number(obj: dict, key: str, path: str, default: Any = ...) -> Any:
    if key not in obj:
        if default is ...:
            raise SchemaError(f"{path}.{key}", "required field missing")
        return default
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{path}.{key}", f"expected a number, got {type(value).__name__}")
    return float(value)


def _integer(obj: dict, key: str, path: str, default: Any = ...) -> Any:
    if key not in obj:
        if default is ...:
            raise SchemaError(f"{path}.{key}", "required field missing")
        return default
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{path}.{key}", f"expected an integer, got {type(value).__name__}")
    return value


def _string(obj: dict, key: str, path: str, default: Any = ...) -> Any:
    if key not in obj:
        if default is ...:
            raise SchemaError(f"{path}.{key}", "required field missing")
        return default
    value = obj[key]
    if not isinstance(value, str):
        raise SchemaError(f"{path}.{key}", f"expected a string, got {type(value).__name__}")
    return value


def _number_list(obj: dict, key: str, path: str) -> list[float]:
    if key not in obj:
        raise SchemaError(f"{path}.{key}", "required field missing")
    value = obj[key]
    if not isinstance(value, list):
        raise SchemaError(f"{path}.{key}", f"expected an array, got {type(value).__name__}")
    out = []
    for i, item in enumerate(value):
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise SchemaError(
                f"{path}.{key}[{i}]", f"expected a number, got {type(item).__name__}"
            )
        out.append(float(item))
    return out


def _parse_deal(obj: dict) -> DealParameters:
    if "deal" not in obj:
        raise SchemaError("deal", "required field missing")
    deal = _object(obj["deal"], "deal")
    _reject_unknown(deal, deal_field_names(), "deal")
    kwargs: dict[str, Any] = {}
    for name in deal_field_names():
        if name == "classification":
            raw = _string(deal, name, "deal")
            try:
                kwargs[name] = LeaseClassification(raw)
            except ValueError:
                choices = ", ".join(c.value for c in LeaseClassification)
                raise SchemaError(f"deal.{name}", f"expected one of: {choices}") from None
        elif name in _INT_DEAL_FIELDS:
            default = None if name in _OPTIONAL_DEAL_FIELDS else ...
            kwargs[name] = _integer(deal, name, "deal", default)
        elif name in _OPTIONAL_DEAL_FIELDS:
            kwargs[name] = _number(deal, name, "deal", None)
        else:
            kwargs[name] = _number(deal, name, "deal")
    return DealParameters(**kwargs)


def _parse_curves(obj: dict) -> CurveSet:
    raw = obj.get("curves", {})
    raw = _object(raw, "curves")
    curves = {}
    for name in raw:
        if name not in KNOWN_CURVE_NAMES:
            raise SchemaError(
                f"curves.{name}",
                f"unknown curve name (allowed: {', '.join(sorted(KNOWN_CURVE_NAMES))})",
            )
    for name in sorted(raw):
        body = _object(raw[name], f"curves.{name}")
        _reject_unknown(body, _CURVE_KEYS, f"curves.{name}")
        interpolation = _string(body, "interpolation", f"curves.{name}", "cubic")
        if interpolation not in INTERPOLATIONS:
            raise SchemaError(
                f"curves.{name}.interpolation",
                f"expected one of: {', '.join(INTERPOLATIONS)}",
            )
        xs = _number_list(body, "xs", f"curves.{name}")
        ys = _number_list(body, "ys", f"curves.{name}")
        try:
            curves[name] = SampledCurve(name, tuple(xs), tuple(ys), interpolation)
        except InvalidInputError as exc:
            raise SchemaError(f"curves.{name}", str(exc)) from None
    return CurveSet(curves)


def _parse_options(obj: dict) -> ScenarioOptions:
    raw = obj.get("options", {})
    raw = _object(raw, "options")
    _reject_unknown(raw, _OPTIONS_KEYS, "options")
    mode = _string(raw, "mode", "options", "verbatim")
    if mode != "verbatim":
        raise SchemaError("options.mode", f"unsupported mode {mode!r} (supported: verbatim)")
    fd = raw.get("fd_step_fraction")
    if fd is not None:
        fd = _number(raw, "fd_step_fraction", "options")
        if not fd > 0.0:
            raise SchemaError("options.fd_step_fraction", f"must be > 0, got {fd!r}")
    tol = _number(raw, "breakeven_tol", "options", 1e-6)
    if not tol > 0.0:
        raise SchemaError("options.breakeven_tol", f"must be > 0, got {tol!r}")
    iters = _integer(raw, "breakeven_max_iterations", "options", 200)
    if iters < 1:
        raise SchemaError("options.breakeven_max_iterations", f"must be >= 1, got {iters!r}")
    return ScenarioOptions(mode, fd, tol, iters)


def parse_scenario_obj(root: Any, check: bool = True) -> Scenario:
    """Build a Scenario from already-decoded JSON; see parse_scenario."""
    root = _object(root, "$")
    _reject_unknown(root, _TOP_KEYS, "")
    version = _string(root, "schema_version", "$")
    if version != SCHEMA_VERSION:
        raise SchemaError(
            "schema_version", f"unsupported version {version!r} (supported: {SCHEMA_VERSION})"
        )

    meta_raw = _object(root.get("meta", {}), "meta")
    _reject_unknown(meta_raw, _META_KEYS, "meta")
    meta = ScenarioMeta(
        name=_string(meta_raw, "name", "meta", "unnamed"),
        lifecycle_stage=_string(meta_raw, "lifecycle_stage", "meta", ""),
        notes=_string(meta_raw, "notes", "meta", ""),
    )

    deal = _parse_deal(root).resolved()
    if check:
        bad = violations(validate(deal))
        if bad:
            raise DealValidationError(bad)
    curves = _parse_curves(root)
    options = _parse_options(root)
    return Scenario(deal=deal, curves=curves, meta=meta, options=options)


def parse_scenario(text: str, check: bool = True) -> Scenario:
    """Parse and fully validate scenario JSON; defaults are materialized.

    `check=False` keeps the schema strict but skips the hard-bound gate so
    callers (the `validate` command) can report findings themselves.
    """
    try:
        root = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ScenarioSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    return parse_scenario_obj(root, check=check)


def load_scenario(path: str, check: bool = True) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scenario(fh.read(), check=check)


def scenario_to_dict(s: Scenario) -> dict:
    """Canonical dict form: fixed key order, curves sorted by name."""
    deal: dict[str, Any] = {}
    for name in deal_field_names():
        value = getattr(s.deal, name)
        deal[name] = value.value if name == "classification" else value
    curves = {
        name: {
            "interpolation": curve.interpolation,
            "xs": list(curve.xs),
            "ys": list(curve.ys),
        }
        for name, curve in sorted(s.curves.curves.items())
    }
    return {
        "schema_version": s.schema_version,
        "meta": {
            "name": s.meta.name,
            "lifecycle_stage": s.meta.lifecycle_stage,
            "notes": s.meta.notes,
        },
        "deal": deal,
        "curves": curves,
        "options": {
            "mode": s.options.mode,
            "fd_step_fraction": s.options.fd_step_fraction,
            "breakeven_tol": s.options.breakeven_tol,
            "breakeven_max_iterations": s.options.breakeven_max_iterations,
        },
    }


def _dump(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def serialize_scenario(s: Scenario) -> str:
    """Canonical text form; floats use the shortest round-trip representation."""
    return _dump(scenario_to_dict(s))


@dataclass(frozen=True)
class ReportDocument:
    """A decision report bundled with the scenario echo that produced it."""

    scenario: Scenario
    cashflows: CashflowSummary
    report: DecisionReport
    version: str
    generated_at: str


def build_report(scenario: Scenario, include_schedules: bool = True) -> ReportDocument:
    cf = derive_cashflows(scenario.deal, include_schedules=include_schedules)
    report = evaluate(
        scenario.deal, scenario.curves, scenario.options.fd_step_fraction, cf=cf
    )
    stamp = datetime.now(timezone.utc).isoformat(timespec="microseconds")
    return ReportDocument(
        scenario=scenario,
        cashflows=cf,
        report=report,
        version=__version__,
        generated_at=stamp.replace("+00:00", "Z"),
    )


def _net_position_to_dict(np_: NetPosition) -> dict:
    return {
        "value": np_.value,
        "components": dict(np_.components),
        "survival_factor": np_.survival_factor,
        "notes": list(np_.notes),
    }


def _condition_to_dict(c: ConditionResult) -> dict:
    return {
        "id": c.id,
        "holds": c.holds,
        "lhs": c.lhs,
        "rhs": c.rhs,
        "margin": c.margin,
        "inputs_echo": dict(c.inputs_echo),
        "text": c.text,
        "notes": list(c.notes),
    }


def _cashflows_to_dict(cf: CashflowSummary) -> dict:
    out: dict[str, Any] = {
        "L_s": cf.lease_pv,
        "I": cf.interest_pv,
        "D": cf.depreciation_pv,
        "TV": cf.terminal_value_pv,
    }
    if cf.amortization is not None or cf.depreciation is not None:
        schedules: dict[str, Any] = {}
        if cf.amortization is not None:
            schedules["amortization"] = [
                {
                    "period": row.period_index,
                    "payment": row.payment,
                    "interest": row.interest,
                    "principal": row.principal,
                    "balance_after": row.balance_after,
                }
                for row in cf.amortization
            ]
        if cf.depreciation is not None:
            schedules["depreciation"] = [
                {"period": idx, "amount": amount} for idx, amount in cf.depreciation.items
            ]
        out["schedules"] = schedules
    return out


def report_to_dict(doc: ReportDocument) -> dict:
    return {
        "tool": {"name": "slb-decider", "version": doc.version},
        "generated_at": doc.generated_at,
        "scenario": scenario_to_dict(doc.scenario),
        "cashflows": _cashflows_to_dict(doc.cashflows),
        "n_sl": _net_position_to_dict(doc.report.n_sl),
        "n_b": _net_position_to_dict(doc.report.n_b),
        "conditions": [_condition_to_dict(c) for c in doc.report.conditions],
        "recommendation": doc.report.recommendation.value,
        "failed_conditions": list(doc.report.failed_conditions),
        "warnings": list(doc.report.warnings),
    }


def report_to_json(doc: ReportDocument) -> str:
    return _dump(report_to_dict(doc))


@dataclass(frozen=True)
class BatchEntry:
    path: str
    name: str
    report: Optional[ReportDocument]
    error: Optional[str] = None


def run_batch(paths: list[str]) -> list[BatchEntry]:
    """Evaluate each scenario file; failures are collected per entry, never fatal."""
    entries = []
    for path in paths:
        try:
            scenario = load_scenario(path)
            doc = build_report(scenario, include_schedules=False)
            entries.append(BatchEntry(path, scenario.meta.name, doc))
        except (OSError, DecisionModelError) as exc:
            entries.append(BatchEntry(path, "", None, error=str(exc)))
    return entries


def batch_to_csv(entries: list[BatchEntry]) -> str:
    """Fixed-header CSV over the successful entries, in input order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for entry in entries:
        if entry.report is None:
            continue
        report = entry.report.report
        by_id = {c.id: c for c in report.conditions}
        writer.writerow(
            [
                entry.name,
                repr(report.n_sl.value),
                repr(report.n_b.value),
                *["true" if by_id[cid].holds else "false" for cid in ALL_CONDITION_IDS],
                report.recommendation.value,
            ]
        )
    return buf.getvalue()


def batch_to_dict(entries: list[BatchEntry]) -> dict:
    return {
        "ok": all(e.error is None for e in entries),
        "reports": [report_to_dict(e.report) for e in entries if e.report is not None],
        "errors": [
            {"path": e.path, "error": e.error} for e in entries if e.error is not None
        ],
    }


def breakeven_to_dict(result: "BreakevenResult") -> dict:
    return {
        "variable": result.variable,
        "value": result.value,
        "residual": result.residual,
        "iterations": result.iterations,
        "bracket": list(result.bracket),
    }


def sweep_to_dict(variable: str, rows: list["SweepRow"]) -> dict:
    return {
        "variable": variable,
        "rows": [
            {
                "x": row.x,
                "n_sl": row.n_sl,
                "n_b": row.n_b,
                "recommendation": (
                    None if row.recommendation is None else row.recommendation.value
                ),
                "error": row.error,
                "is_argmax_n_sl": row.is_argmax_n_sl,
                "is_argmax_n_b": row.is_argmax_n_b,
            }
            for row in rows
        ],
    }


def tornado_to_dict(perturbation: float, rows: list["TornadoRow"]) -> dict:
    return {
        "perturbation": perturbation,
        "rows": [
            {
                "parameter": row.parameter,
                "base": row.base,
                "x_down": row.x_down,
                "x_up": row.x_up,
                "delta_n_sl_down": row.delta_n_sl_down,
                "delta_n_sl_up": row.delta_n_sl_up,
                "delta_n_b_down": row.delta_n_b_down,
                "delta_n_b_up": row.delta_n_b_up,
                "delta_gap_down": row.delta_gap_down,
                "delta_gap_up": row.delta_gap_up,
                "rank_key": row.rank_key,
            }
            for row in rows
        ],
    }
