"""Stateless HTTP facade over the engine.

Every response is an envelope {ok, result} or {ok, error: {code, message,
path}}. Status mapping: 400 for schema/validation problems, 413 for
oversized sweep grids, 422 for solver and domain failures, 500 for anything
unexpected. Result payloads are serialized exactly like the CLI's stdout
documents so the two stay comparable byte for byte (timestamps aside).
"""

from __future__ import annotations

import json
import logging
from typing import Any, Optional

from fastapi import FastAPI, Request, Response

from ._version import __version__
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
    Scenario,
    breakeven_to_dict,
    build_report,
    parse_scenario_obj,
    report_to_dict,
    sweep_to_dict,
    tornado_to_dict,
)
from .sensitivity import breakeven, linear_grid, sweep, tornado

SWEEP_POINT_CAP = 10_001

log = logging.getLogger("slb_decider.service")


class _HttpFailure(Exception):
    def __init__(self, status: int, code: str, message: str, path: Optional[str] = None):
        self.status = status
        self.code = code
        self.message = message
        self.path = path
        super().__init__(message)


def _json_response(status: int, payload: dict) -> Response:
    body = json.dumps(payload, indent=2, ensure_ascii=False, allow_nan=False) + "\n"
    return Response(content=body, status_code=status, media_type="application/json")


def _ok(result: dict) -> Response:
    return _json_response(200, {"ok": True, "result": result})


def _fail(status: int, code: str, message: str, path: Optional[str] = None) -> Response:
    return _json_response(
        status, {"ok": False, "error": {"code": code, "message": message, "path": path}}
    )


async def _read_body(request: Request) -> Any:
    try:
        return json.loads(await request.body())
    except json.JSONDecodeError as exc:
        raise _HttpFailure(400, "syntax", f"line {exc.lineno}, column {exc.colno}: {exc.msg}")


def _scenario_from(obj: Any, path: str = "") -> Scenario:
    try:
        return parse_scenario_obj(obj)
    except SchemaError as exc:
        full = f"{path}.{exc.path}" if path and exc.path else (path or exc.path)
        raise _HttpFailure(400, "schema", exc.message, full) from None
    except DealValidationError as exc:
        first = exc.findings[0].field if exc.findings else None
        field_path = f"{path}.deal.{first}" if path else f"deal.{first}"
        raise _HttpFailure(400, "validation", str(exc), field_path if first else path) from None


def _field(body: Any, key: str, kind: type, path: str = "", default: Any = ...) -> Any:
    if not isinstance(body, dict):
        raise _HttpFailure(400, "schema", "expected a JSON object body", path or "$")
    if key not in body:
        if default is ...:
            raise _HttpFailure(400, "schema", "required field missing", key)
        return default
    value = body[key]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise _HttpFailure(400, "schema", "expected a number", key)
        return float(value)
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise _HttpFailure(400, "schema", "expected an integer", key)
        return value
    if not isinstance(value, kind):
        raise _HttpFailure(400, "schema", f"expected {kind.__name__}", key)
    return value


def create_app(cors_origin: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="slb-decider", version=__version__, docs_url=None, redoc_url=None)
    if cors_origin is not None:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[cors_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(_HttpFailure)
    async def _on_failure(_request: Request, exc: _HttpFailure) -> Response:
        return _fail(exc.status, exc.code, exc.message, exc.path)

    @app.exception_handler(Exception)
    async def _on_unexpected(_request: Request, exc: Exception) -> Response:
        log.exception("unhandled error: %s", exc)
        return _fail(500, "internal", "internal error")

    def _domain(exc: Exception) -> _HttpFailure:
        return _HttpFailure(422, "domain", str(exc))

    @app.get("/api/v1/health")
    async def health() -> Response:
        return _json_response(200, {"status": "ok", "version": __version__})

    @app.post("/api/v1/evaluate")
    async def evaluate_endpoint(request: Request) -> Response:
        scenario = _scenario_from(await _read_body(request))
        try:
            doc = build_report(scenario)
        except (CurveError, BracketError, ClassificationError, InvalidInputError) as exc:
            raise _domain(exc) from None
        return _ok(report_to_dict(doc))

    @app.post("/api/v1/breakeven")
    async def breakeven_endpoint(request: Request) -> Response:
        body = await _read_body(request)
        scenario = _scenario_from(_field(body, "scenario", dict), "scenario")
        variable = _field(body, "variable", str)
        lo = _field(body, "lo", float)
        hi = _field(body, "hi", float)
        try:
            result = breakeven(
                scenario.deal,
                variable,
                lo,
                hi,
                tol_scale=scenario.options.breakeven_tol,
                max_iterations=scenario.options.breakeven_max_iterations,
            )
        except (CurveError, BracketError, ClassificationError, InvalidInputError) as exc:
            raise _domain(exc) from None
        return _ok(breakeven_to_dict(result))

    @app.post("/api/v1/sweep")
    async def sweep_endpoint(request: Request) -> Response:
        body = await _read_body(request)
        scenario = _scenario_from(_field(body, "scenario", dict), "scenario")
        variable = _field(body, "variable", str)
        start = _field(body, "from", float)
        stop = _field(body, "to", float)
        steps = _field(body, "steps", int)
        if steps > SWEEP_POINT_CAP:
            raise _HttpFailure(
                413, "too_large", f"sweep capped at {SWEEP_POINT_CAP} points, got {steps}",
                "steps",
            )
        if steps < 1:
            raise _HttpFailure(400, "schema", "steps must be >= 1", "steps")
        try:
            rows = sweep(
                scenario.deal,
                scenario.curves,
                variable,
                linear_grid(start, stop, steps),
                scenario.options.fd_step_fraction,
            )
        except (CurveError, BracketError, ClassificationError, InvalidInputError) as exc:
            raise _domain(exc) from None
        return _ok(sweep_to_dict(variable, rows))

    @app.post("/api/v1/tornado")
    async def tornado_endpoint(request: Request) -> Response:
        body = await _read_body(request)
        scenario = _scenario_from(_field(body, "scenario", dict), "scenario")
        perturbation = _field(body, "perturbation", float, default=0.10)
        try:
            rows = tornado(scenario.deal, perturbation)
        except (CurveError, BracketError, ClassificationError, InvalidInputError) as exc:
            raise _domain(exc) from None
        return _ok(tornado_to_dict(perturbation, rows))

    return app


app = create_app()
