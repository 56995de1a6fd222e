"""User-supplied sampled curves and finite-difference stencils.

The derivative-based decision conditions need curves such as borrowing
cost as a function of leverage; no functional forms are assumed, so each
curve is a sampled grid with a named interpolation scheme. Cubic curves
use a not-a-knot piecewise cubic, which reproduces cubic polynomials
exactly; that exactness is what makes the third-derivative stencil
well-defined on sampled data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import (
    CurveCapabilityError,
    CurveDomainError,
    InvalidInputError,
    MissingCurveError,
)

# Closed list of curve roles the engine understands, keyed by the value the
# curve returns and the variable it is sampled over.
KNOWN_CURVE_NAMES = frozenset(
    {
        "R_bb_of_DC",
        "R_ba_of_DC",
        "R_f_of_DC",
        "R_dlev_of_DC",
        "r_a_of_DC",
        "P_dss_of_DC",
        "R_s_of_S",
        "R_f_of_P",
        "P_dss_of_Rbb",
        "P_dss_of_Rf",
    }
)

INTERPOLATIONS = ("linear", "cubic")


@dataclass(frozen=True)
class SampledCurve:
    """A univariate curve sampled on a strictly increasing grid."""

    name: str
    xs: tuple[float, ...]
    ys: tuple[float, ...]
    interpolation: str = "cubic"

    def __post_init__(self):
        if self.interpolation not in INTERPOLATIONS:
            raise InvalidInputError(
                f"curve {self.name!r}: interpolation must be one of {INTERPOLATIONS}, "
                f"got {self.interpolation!r}"
            )
        if len(self.xs) != len(self.ys):
            raise InvalidInputError(
                f"curve {self.name!r}: xs and ys must have equal length "
                f"({len(self.xs)} != {len(self.ys)})"
            )
        if len(self.xs) < 2:
            raise InvalidInputError(f"curve {self.name!r}: needs at least 2 samples")
        xs = np.asarray(self.xs, dtype=float)
        ys = np.asarray(self.ys, dtype=float)
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
            raise InvalidInputError(f"curve {self.name!r}: samples must be finite")
        if not np.all(np.diff(xs) > 0):
            raise InvalidInputError(f"curve {self.name!r}: xs must be strictly increasing")

    @property
    def lo(self) -> float:
        return self.xs[0]

    @property
    def hi(self) -> float:
        return self.xs[-1]

    @property
    def span(self) -> float:
        return self.hi - self.lo

    def default_step(self) -> float:
        return self.span / 1000.0

    def _interpolant(self) -> Callable[[float], float]:
        # Rebuilding per call would dominate d1/d3; cache on first use.
        cached = self.__dict__.get("_cached_interpolant")
        if cached is not None:
            return cached
        xs = np.asarray(self.xs, dtype=float)
        ys = np.asarray(self.ys, dtype=float)
        if self.interpolation == "linear":
            fn = lambda x: float(np.interp(x, xs, ys))  # noqa: E731
        else:
            spline = CubicSpline(xs, ys)  # not-a-knot; degenerates cleanly for n<4
            fn = lambda x: float(spline(x))  # noqa: E731
        object.__setattr__(self, "_cached_interpolant", fn)
        return fn

    def _require_inside(self, x: float, pad: float) -> None:
        if x - pad < self.lo or x + pad > self.hi:
            raise CurveDomainError(
                f"curve {self.name!r}: evaluation at {x!r} with step {pad!r} leaves "
                f"domain [{self.lo!r}, {self.hi!r}]"
            )

    def value(self, x: float) -> float:
        self._require_inside(x, 0.0)
        return self._interpolant()(x)


def d1(curve: SampledCurve, x: float, h: float | None = None) -> float:
    """Central first-derivative estimate (f(x+h) - f(x-h)) / 2h on the interpolant."""
    if h is None:
        h = curve.default_step()
    if h <= 0:
        raise InvalidInputError(f"step must be > 0, got {h!r}")
    curve._require_inside(x, h)
    f = curve._interpolant()
    return (f(x + h) - f(x - h)) / (2.0 * h)


def d3(curve: SampledCurve, x: float, h: float | None = None) -> float:
    """Third-derivative stencil (f(x+2h) - 2f(x+h) + 2f(x-h) - f(x-2h)) / 2h^3."""
    if curve.interpolation != "cubic":
        raise CurveCapabilityError(
            f"curve {curve.name!r}: third derivative requires cubic interpolation"
        )
    if len(curve.xs) < 5:
        raise CurveCapabilityError(
            f"curve {curve.name!r}: third derivative requires at least 5 samples, "
            f"got {len(curve.xs)}"
        )
    if h is None:
        h = curve.default_step()
    if h <= 0:
        raise InvalidInputError(f"step must be > 0, got {h!r}")
    curve._require_inside(x, 2.0 * h)
    f = curve._interpolant()
    return (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) / (
        2.0 * h * h * h
    )


@dataclass(frozen=True)
class CurveSet:
    """Named curves; conditions look up the curves they need at evaluation time."""

    curves: Mapping[str, SampledCurve]

    def __post_init__(self):
        unknown = set(self.curves) - KNOWN_CURVE_NAMES
        if unknown:
            raise InvalidInputError(
                f"unknown curve name(s): {sorted(unknown)}; "
                f"expected a subset of {sorted(KNOWN_CURVE_NAMES)}"
            )

    @classmethod
    def empty(cls) -> "CurveSet":
        return cls({})

    def require(self, name: str, needed_for: str = "") -> SampledCurve:
        try:
            return self.curves[name]
        except KeyError:
            raise MissingCurveError(name, needed_for) from None

    def __contains__(self, name: str) -> bool:
        return name in self.curves

    def names(self) -> list[str]:
        return sorted(self.curves)
