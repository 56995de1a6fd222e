"""Exception types shared across the package.

The CLI and HTTP service map these onto exit codes / status codes:
syntax and I/O problems, schema/validation findings, and solver or
domain failures are three distinct failure classes.
"""

from __future__ import annotations


class DecisionModelError(Exception):
    """Base class for all package errors."""


class InvalidInputError(DecisionModelError, ValueError):
    """An operation received an argument outside its contract."""


class ClassificationError(DecisionModelError):
    """A net-position variant was invoked for the wrong lease classification."""


class DealValidationError(DecisionModelError):
    """A deal violates hard parameter bounds.

    Carries the full findings list (violations and warnings).
    """

    def __init__(self, findings):
        self.findings = list(findings)
        violations = [f for f in self.findings if f.level == "violation"]
        msg = "; ".join(f"{f.field}: {f.message}" for f in violations) or "invalid deal"
        super().__init__(msg)


class CurveError(DecisionModelError):
    """Base class for sampled-curve failures."""


class CurveDomainError(CurveError):
    """An evaluation point (including stencil offsets) left the curve domain."""


class CurveCapabilityError(CurveError):
    """The curve cannot answer the query (e.g. third derivative on linear)."""


class MissingCurveError(CurveError):
    """A condition needs a curve the scenario does not provide."""

    def __init__(self, name: str, needed_for: str = ""):
        self.curve_name = name
        suffix = f" (needed for {needed_for})" if needed_for else ""
        super().__init__(f"curve '{name}' is not defined in the scenario{suffix}")


class BracketError(DecisionModelError):
    """The breakeven objective does not change sign over the bracket."""

    def __init__(self, lo: float, hi: float, g_lo: float, g_hi: float):
        self.lo, self.hi = lo, hi
        self.g_lo, self.g_hi = g_lo, g_hi
        super().__init__(
            f"no sign change over bracket ({lo!r}, {hi!r}): "
            f"g(lo)={g_lo!r}, g(hi)={g_hi!r}"
        )


class SchemaError(DecisionModelError):
    """Scenario text is well-formed JSON but violates the schema."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


class ScenarioSyntaxError(DecisionModelError):
    """Scenario text is not well-formed JSON."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
