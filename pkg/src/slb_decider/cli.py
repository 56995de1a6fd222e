"""Command-line interface.

Machine output (JSON, CSV) goes to stdout; everything else, including the
--pretty renderings and all error messages, goes to stderr. Exit codes:
0 success, 1 I/O or JSON syntax problems, 2 schema or validation failures,
3 solver and domain failures (missing curves, bad brackets, out-of-domain
evaluation points).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from ._version import __version__
from .deal import validate as validate_deal
from .errors import (
    BracketError,
    ClassificationError,
    CurveError,
    DealValidationError,
    InvalidInputError,
    SchemaError,
    ScenarioSyntaxError,
)
from .scenario import (
    batch_to_csv,
    batch_to_dict,
    breakeven_to_dict,
    build_report,
    load_scenario,
    report_to_dict,
    run_batch,
    sweep_to_dict,
    tornado_to_dict,
)
from .sensitivity import (
    BREAKEVEN_VARIABLES,
    breakeven,
    linear_grid,
    resolve_sweep_variable,
    sweep,
    tornado,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_SOLVER = 3

log = logging.getLogger("slb_decider")


def _configure_logging() -> None:
    level_name = os.environ.get("SLB_DECIDER_LOG", "error").lower()
    level = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}.get(
        level_name, logging.ERROR
    )
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def _emit(document: dict) -> None:
    json.dump(document, sys.stdout, indent=2, ensure_ascii=False, allow_nan=False)
    sys.stdout.write("\n")


def _pretty_conditions(conditions: list[dict]) -> str:
    lines = ["  id  holds  margin"]
    for cond in conditions:
        mark = "yes" if cond["holds"] else "no "
        lines.append(f"  {cond['id']:<3} {mark}    {cond['margin']:+.6g}")
    return "\n".join(lines)


def _pretty_report(doc: dict) -> str:
    n_sl = doc["n_sl"]["value"]
    n_b = doc["n_b"]["value"]
    lines = [
        f"scenario: {doc['scenario']['meta']['name']}",
        f"N_sl = {n_sl:,.2f}",
        f"N_b  = {n_b:,.2f}",
        f"gap (N_sl - N_b) = {n_sl - n_b:,.2f}",
        "conditions:",
        _pretty_conditions(doc["conditions"]),
        f"recommendation: {doc['recommendation']}",
    ]
    if doc["failed_conditions"]:
        lines.append(f"failed: {', '.join(doc['failed_conditions'])}")
    for warning in doc["warnings"]:
        lines.append(f"warning: {warning}")
    return "\n".join(lines)


def _cmd_evaluate(args) -> int:
    scenario = load_scenario(args.scenario)
    doc = report_to_dict(build_report(scenario, include_schedules=not args.no_schedules))
    _emit(doc)
    if args.pretty:
        print(_pretty_report(doc), file=sys.stderr)
    log.info("evaluated %s: %s", scenario.meta.name, doc["recommendation"])
    return EXIT_OK


def _cmd_compare(args) -> int:
    scenario = load_scenario(args.scenario)
    doc = report_to_dict(build_report(scenario, include_schedules=False))
    n_sl = doc["n_sl"]["value"]
    n_b = doc["n_b"]["value"]
    out = {
        "scenario_name": doc["scenario"]["meta"]["name"],
        "n_sl": n_sl,
        "n_b": n_b,
        "gap": n_sl - n_b,
        "conditions": [
            {"id": c["id"], "holds": c["holds"], "margin": c["margin"]}
            for c in doc["conditions"]
        ],
        "recommendation": doc["recommendation"],
    }
    _emit(out)
    if args.pretty:
        print(_pretty_report(doc), file=sys.stderr)
    return EXIT_OK


def _cmd_validate(args) -> int:
    scenario = load_scenario(args.scenario, check=False)
    findings = validate_deal(scenario.deal)
    out = {
        "findings": [
            {"level": f.level, "field": f.field, "message": f.message} for f in findings
        ]
    }
    _emit(out)
    if args.pretty:
        for f in findings:
            print(f"{f.level}: {f.field}: {f.message}", file=sys.stderr)
        if not findings:
            print("no findings", file=sys.stderr)
    if any(f.level == "violation" for f in findings):
        return EXIT_INVALID
    return EXIT_OK


def _cmd_breakeven(args) -> int:
    scenario = load_scenario(args.scenario)
    result = breakeven(
        scenario.deal,
        args.var,
        args.lo,
        args.hi,
        tol_scale=scenario.options.breakeven_tol,
        max_iterations=scenario.options.breakeven_max_iterations,
    )
    _emit(breakeven_to_dict(result))
    if args.pretty:
        print(
            f"{result.variable} breakeven at {result.value!r} "
            f"(residual {result.residual:.3e}, {result.iterations} iterations)",
            file=sys.stderr,
        )
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if args.steps < 1:
        print("error: --steps must be >= 1", file=sys.stderr)
        return EXIT_INVALID
    try:
        resolve_sweep_variable(args.var)
    except InvalidInputError as exc:
        # Bad flag value, not a solver failure; same exit class as argparse.
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    scenario = load_scenario(args.scenario)
    grid = linear_grid(getattr(args, "from"), args.to, args.steps)
    rows = sweep(
        scenario.deal, scenario.curves, args.var, grid, scenario.options.fd_step_fraction
    )
    _emit(sweep_to_dict(args.var, rows))
    if args.pretty:
        for row in rows:
            if row.error is not None:
                print(f"  x={row.x:<12g} error: {row.error}", file=sys.stderr)
            else:
                marks = "".join(
                    m for m, on in (("*", row.is_argmax_n_sl), ("+", row.is_argmax_n_b)) if on
                )
                print(
                    f"  x={row.x:<12g} N_sl={row.n_sl:<16,.2f} N_b={row.n_b:<16,.2f} "
                    f"{row.recommendation.value} {marks}",
                    file=sys.stderr,
                )
        print("  (* = argmax N_sl, + = argmax N_b)", file=sys.stderr)
    return EXIT_OK


def _cmd_tornado(args) -> int:
    if not args.perturb > 0:
        print("error: --perturb must be > 0", file=sys.stderr)
        return EXIT_INVALID
    scenario = load_scenario(args.scenario)
    rows = tornado(scenario.deal, args.perturb)
    _emit(tornado_to_dict(args.perturb, rows))
    if args.pretty:
        for row in rows:
            print(
                f"  {row.parameter:<26} gap moves {row.delta_gap_down:+,.2f} / "
                f"{row.delta_gap_up:+,.2f}",
                file=sys.stderr,
            )
    return EXIT_OK


def _cmd_run_batch(args) -> int:
    entries = run_batch(args.scenarios)
    if args.format == "csv":
        sys.stdout.write(batch_to_csv(entries))
    else:
        _emit(batch_to_dict(entries))
    failures = [e for e in entries if e.error is not None]
    for entry in failures:
        print(f"error: {entry.path}: {entry.error}", file=sys.stderr)
    return EXIT_IO if failures else EXIT_OK


def _cmd_serve(args) -> int:
    # Imported lazily so the CLI works without the service extras loaded.
    import uvicorn

    from .service import create_app

    app = create_app(cors_origin=args.cors_origin)
    uvicorn.run(app, host=args.bind, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slb-decider",
        description="Sale-leaseback versus new-debt decision engine.",
    )
    parser.add_argument("--version", action="version", version=f"slb-decider {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def scenario_cmd(name: str, help_: str, pretty: bool = True):
        cmd = sub.add_parser(name, help=help_)
        cmd.add_argument("scenario", help="path to a scenario JSON file")
        if pretty:
            cmd.add_argument(
                "--pretty", action="store_true", help="render a human summary to stderr"
            )
        return cmd

    evaluate_cmd = scenario_cmd("evaluate", "full decision report as JSON")
    evaluate_cmd.add_argument(
        "--no-schedules",
        action="store_true",
        help="omit amortization/depreciation schedules from the report",
    )
    evaluate_cmd.set_defaults(fn=_cmd_evaluate)

    compare_cmd = scenario_cmd("compare", "side-by-side N_sl vs N_b with conditions")
    compare_cmd.set_defaults(fn=_cmd_compare)

    validate_cmd = scenario_cmd("validate", "report validation findings only")
    validate_cmd.set_defaults(fn=_cmd_validate)

    breakeven_cmd = scenario_cmd("breakeven", "bisect the N_sl = N_b indifference point")
    breakeven_cmd.add_argument(
        "--var", required=True, choices=sorted(BREAKEVEN_VARIABLES), help="variable to solve"
    )
    breakeven_cmd.add_argument("--lo", type=float, required=True, help="bracket low end")
    breakeven_cmd.add_argument("--hi", type=float, required=True, help="bracket high end")
    breakeven_cmd.set_defaults(fn=_cmd_breakeven)

    sweep_cmd = scenario_cmd("sweep", "evaluate over a grid of one variable")
    sweep_cmd.add_argument("--var", required=True, help="scalar field or symbol alias")
    sweep_cmd.add_argument("--from", type=float, required=True, help="grid start")
    sweep_cmd.add_argument("--to", type=float, required=True, help="grid end")
    sweep_cmd.add_argument("--steps", type=int, required=True, help="number of grid points")
    sweep_cmd.set_defaults(fn=_cmd_sweep)

    tornado_cmd = scenario_cmd("tornado", "rank scalar inputs by gap impact")
    tornado_cmd.add_argument(
        "--perturb", type=float, default=0.10, help="relative perturbation (default 0.10)"
    )
    tornado_cmd.set_defaults(fn=_cmd_tornado)

    batch_cmd = sub.add_parser("run-batch", help="evaluate many scenario files")
    batch_cmd.add_argument("scenarios", nargs="+", help="scenario JSON files")
    batch_cmd.add_argument(
        "--format", choices=("json", "csv"), default="json", help="stdout format"
    )
    batch_cmd.set_defaults(fn=_cmd_run_batch)

    serve_cmd = sub.add_parser("serve", help="run the HTTP service")
    serve_cmd.add_argument("--port", type=int, default=8321)
    serve_cmd.add_argument("--bind", default="127.0.0.1")
    serve_cmd.add_argument("--cors-origin", default=None, help="allow this origin via CORS")
    serve_cmd.set_defaults(fn=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ScenarioSyntaxError as exc:
        print(f"error: {args.scenario if hasattr(args, 'scenario') else ''}: {exc}".strip(),
              file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (SchemaError, DealValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (CurveError, BracketError, ClassificationError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
