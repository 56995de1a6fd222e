import pytest

from slb_decider import (
    CurveSet,
    InvalidInputError,
    MissingCurveError,
    SampledCurve,
    d1,
    d3,
)
from slb_decider.curves import KNOWN_CURVE_NAMES
from slb_decider.errors import CurveCapabilityError, CurveDomainError


def sampled(fn, lo, hi, n, name="R_f_of_DC", interpolation="cubic"):
    xs = tuple(lo + (hi - lo) * k / (n - 1) for k in range(n))
    return SampledCurve(name, xs, tuple(fn(x) for x in xs), interpolation)


class TestConstruction:
    def test_rejects_length_mismatch(self):
        with pytest.raises(InvalidInputError):
            SampledCurve("R_f_of_DC", (0.0, 1.0), (1.0,))

    def test_rejects_single_sample(self):
        with pytest.raises(InvalidInputError):
            SampledCurve("R_f_of_DC", (0.0,), (1.0,))

    def test_rejects_nonfinite(self):
        with pytest.raises(InvalidInputError):
            SampledCurve("R_f_of_DC", (0.0, 1.0), (1.0, float("inf")))

    def test_rejects_unsorted_grid(self):
        with pytest.raises(InvalidInputError):
            SampledCurve("R_f_of_DC", (0.0, 1.0, 1.0), (1.0, 2.0, 3.0))
        with pytest.raises(InvalidInputError):
            SampledCurve("R_f_of_DC", (1.0, 0.0), (1.0, 2.0))

    def test_rejects_unknown_interpolation(self):
        with pytest.raises(InvalidInputError):
            SampledCurve("R_f_of_DC", (0.0, 1.0), (1.0, 2.0), "quintic")

    def test_span_and_default_step(self):
        curve = sampled(lambda x: x, 2.0, 6.0, 5)
        assert curve.lo == 2.0
        assert curve.hi == 6.0
        assert curve.span == 4.0
        assert curve.default_step() == pytest.approx(0.004)


class TestValue:
    def test_linear_interpolation(self):
        curve = SampledCurve("R_f_of_DC", (0.0, 1.0), (10.0, 20.0), "linear")
        assert curve.value(0.5) == pytest.approx(15.0, rel=1e-12)
        assert curve.value(0.0) == 10.0
        assert curve.value(1.0) == 20.0

    def test_cubic_reproduces_cubics(self):
        f = lambda x: 2.0 + 3.0 * x - x**2 + 0.5 * x**3  # noqa: E731
        curve = sampled(f, 0.0, 2.0, 7)
        for x in (0.13, 0.5, 1.0, 1.77):
            assert curve.value(x) == pytest.approx(f(x), rel=1e-9, abs=1e-12)

    def test_outside_domain_raises(self):
        curve = sampled(lambda x: x, 0.0, 1.0, 5)
        with pytest.raises(CurveDomainError):
            curve.value(-0.01)
        with pytest.raises(CurveDomainError):
            curve.value(1.01)


class TestD1:
    def test_exact_on_quadratics_for_any_step(self):
        # The central difference of a quadratic has zero truncation error.
        curve = sampled(lambda x: x**2, 0.0, 2.0, 9)
        assert d1(curve, 1.0) == pytest.approx(2.0, rel=1e-9)
        assert d1(curve, 1.0, h=0.3) == pytest.approx(2.0, rel=1e-9)

    def test_constant_curve(self):
        curve = sampled(lambda x: 5.0, 0.0, 1.0, 5)
        assert d1(curve, 0.5) == pytest.approx(0.0, abs=1e-12)

    def test_cubic_derivative(self):
        # On a cubic the central difference is 3x^2 + h^2 exactly; with the
        # default step of a narrow grid the bias term drops below 1e-9.
        wide = sampled(lambda x: x**3, 0.0, 2.0, 9)
        assert d1(wide, 1.0) == pytest.approx(3.0 + wide.default_step() ** 2, rel=1e-9)
        narrow = sampled(lambda x: x**3, 0.975, 1.025, 9)
        assert d1(narrow, 1.0) == pytest.approx(3.0, rel=1e-9)

    def test_linear_curves_supported(self):
        curve = SampledCurve("R_f_of_DC", (0.0, 1.0, 2.0), (0.0, 3.0, 6.0), "linear")
        assert d1(curve, 1.0) == pytest.approx(3.0, rel=1e-12)

    def test_step_must_be_positive(self):
        curve = sampled(lambda x: x, 0.0, 1.0, 5)
        with pytest.raises(InvalidInputError):
            d1(curve, 0.5, h=0.0)

    def test_stencil_must_stay_inside_domain(self):
        curve = sampled(lambda x: x, 0.0, 1.0, 5)
        with pytest.raises(CurveDomainError):
            d1(curve, 0.0)
        with pytest.raises(CurveDomainError):
            d1(curve, 0.9, h=0.2)
        assert d1(curve, 0.001) == pytest.approx(1.0, rel=1e-9)

    def test_second_order_convergence(self):
        # On x^5 the truncation error is h^2 f'''/6 + O(h^4): halving h
        # divides the error by ~4. Sampled densely so interpolation error
        # is negligible against the stencil term.
        curve = sampled(lambda x: x**5, 0.0, 2.0, 201)
        exact = 5.0
        err_h = abs(d1(curve, 1.0, h=0.2) - exact)
        err_h2 = abs(d1(curve, 1.0, h=0.1) - exact)
        assert 3.0 < err_h / err_h2 < 5.0


class TestD3:
    def test_exact_on_cubics(self):
        curve = sampled(lambda x: x**3, 0.0, 2.0, 9)
        assert d3(curve, 1.0) == pytest.approx(6.0, rel=1e-9)
        assert d3(curve, 0.5, h=0.05) == pytest.approx(6.0, rel=1e-9)

    def test_zero_on_quadratics_and_constants(self):
        assert d3(sampled(lambda x: x**2, 0.0, 2.0, 9), 1.0) == pytest.approx(0.0, abs=1e-6)
        assert d3(sampled(lambda x: 5.0, 0.0, 2.0, 9), 1.0) == pytest.approx(0.0, abs=1e-9)

    def test_requires_cubic_interpolation(self):
        curve = sampled(lambda x: x**3, 0.0, 2.0, 9, interpolation="linear")
        with pytest.raises(CurveCapabilityError, match="cubic"):
            d3(curve, 1.0)

    def test_requires_five_samples(self):
        curve = sampled(lambda x: x**3, 0.0, 2.0, 4)
        with pytest.raises(CurveCapabilityError, match="5 samples"):
            d3(curve, 1.0)

    def test_wider_stencil_needs_more_room(self):
        curve = sampled(lambda x: x**3, 0.0, 1.0, 9)
        h = curve.default_step()
        with pytest.raises(CurveDomainError):
            d3(curve, h, h=h)  # x - 2h < lo
        assert d3(curve, 2.0 * h, h=h) == pytest.approx(6.0, rel=1e-6)

    def test_step_must_be_positive(self):
        curve = sampled(lambda x: x**3, 0.0, 2.0, 9)
        with pytest.raises(InvalidInputError):
            d3(curve, 1.0, h=-0.1)


class TestCurveSet:
    def test_known_names_accepted(self):
        curves = {name: sampled(lambda x: x, 0.0, 1.0, 5, name) for name in KNOWN_CURVE_NAMES}
        cs = CurveSet(curves)
        assert sorted(cs.names()) == sorted(KNOWN_CURVE_NAMES)

    def test_unknown_name_rejected(self):
        with pytest.raises(InvalidInputError, match="unknown curve name"):
            CurveSet({"R_zz_of_DC": sampled(lambda x: x, 0.0, 1.0, 5, "R_f_of_DC")})

    def test_require_present(self):
        curve = sampled(lambda x: x, 0.0, 1.0, 5, "R_bb_of_DC")
        cs = CurveSet({"R_bb_of_DC": curve})
        assert cs.require("R_bb_of_DC") is curve
        assert "R_bb_of_DC" in cs
        assert "R_ba_of_DC" not in cs

    def test_require_missing_names_curve_and_consumer(self):
        with pytest.raises(MissingCurveError) as exc:
            CurveSet.empty().require("r_a_of_DC", needed_for="S1")
        assert exc.value.curve_name == "r_a_of_DC"
        assert "r_a_of_DC" in str(exc.value)
        assert "S1" in str(exc.value)
