import math

import pytest
from scipy import integrate

from bisteklov import (
    PreconditionError,
    ThetaProfile,
    UnsupportedRegimeError,
    ball_comparison_bound,
    ball_geometry,
    bound_report,
    cheng_upper_bound,
    classical_bounds,
    explicit_bound_k0,
    explicit_bound_kneg1,
    main_lower_bound,
    mckean_bound,
    theta_first_zero,
)
from bisteklov.quadrature import adaptive_quad


class TestMainLowerBound:
    def test_unit_disk_profile(self):
        assert main_lower_bound(ThetaProfile(2, 0.0, 1.0), 1.0) == pytest.approx(2.0, abs=1e-12)

    def test_flat_three_dimensional(self):
        value = main_lower_bound(ThetaProfile(3, 0.0, 1.0), 0.5)
        assert value == pytest.approx(3.0 / (1.0 - 0.125), abs=1e-12)

    def test_inverse_inner_radius(self):
        assert main_lower_bound(ThetaProfile(4, 0.0, 0.0), 0.25) == pytest.approx(4.0, abs=1e-12)

    def test_propagates_guard(self):
        with pytest.raises(PreconditionError):
            main_lower_bound(ThetaProfile(2, 0.0, 2.0), 1.0)


class TestExplicitFlat:
    def test_positive_mean_curvature(self):
        assert explicit_bound_k0(2, 1.0, 1.0) == pytest.approx(2.0, abs=1e-14)

    def test_zero_mean_curvature(self):
        assert explicit_bound_k0(3, 0.0, 2.0) == pytest.approx(0.5, abs=1e-15)

    def test_negative_mean_curvature(self):
        # 2/((1+1)^2 - 1) = 2/3; dual route: integrate (1 + r) directly
        oracle = 1.0 / adaptive_quad(lambda r: 1.0 + r, 0.0, 1.0)
        assert oracle == pytest.approx(2.0 / 3.0, abs=1e-13)
        assert explicit_bound_k0(2, -1.0, 1.0) == pytest.approx(oracle, abs=1e-12)

    def test_rejects_radius_past_reach(self):
        with pytest.raises(PreconditionError):
            explicit_bound_k0(2, 1.0, 1.5)

    def test_matches_density_integral(self):
        for n in (2, 3, 4, 5):
            for H in (-2.0, -0.5, 0.0, 0.5, 2.0):
                radii = [t / H for t in (0.25, 0.5, 1.0)] if H > 0 else [0.25, 1.0, 3.0]
                for R in radii:
                    direct = explicit_bound_k0(n, H, R)
                    main = main_lower_bound(ThetaProfile(n, 0.0, H), R)
                    assert direct == pytest.approx(main, abs=1e-12)


class TestExplicitHyperbolic:
    def test_large_radius_limit(self):
        # e^{-200} underflows relative to 1, so the infimum n-1 is reached
        # exactly in double precision
        value = explicit_bound_kneg1(3, 1.0, 100.0)
        assert 2.0 <= value <= 2.0 + 1e-8

    def test_zero_mean_curvature(self):
        assert explicit_bound_kneg1(2, 0.0, 1.0) == pytest.approx(
            1.0 / (math.e - 1.0), rel=1e-14)

    def test_negative_mean_curvature(self):
        # over-estimate chain: the density is below (1+|H|)e^r, so the bound
        # is the reciprocal of integrating 2 e^r over [0, 1]
        oracle = 1.0 / adaptive_quad(lambda r: 2.0 * math.e ** r, 0.0, 1.0)
        assert explicit_bound_kneg1(2, -1.0, 1.0) == pytest.approx(oracle, rel=1e-12)
        assert explicit_bound_kneg1(2, -1.0, 1.0) == pytest.approx(
            1.0 / (2.0 * (math.e - 1.0)), rel=1e-14)

    def test_never_exceeds_main_bound(self):
        for n in (2, 3, 4):
            for H in (1.0, 1.5, 0.5, 0.0, -0.5, -2.0):
                rbar = theta_first_zero(ThetaProfile(n, -1.0, H))
                radii = (0.5, 1.0, 2.0) if math.isinf(rbar) else tuple(
                    f * rbar for f in (0.3, 0.7, 0.95))
                for R in radii:
                    closed = explicit_bound_kneg1(n, H, R)
                    main = main_lower_bound(ThetaProfile(n, -1.0, H), R)
                    assert closed <= main + 1e-9
                    if H == 1.0:
                        assert closed == pytest.approx(main, abs=1e-8)

    def test_mckean_strict_decrease_and_limit(self):
        # strict decrease saturates once (n-1) e^{-(n-1)R} drops below one
        # ulp of n-1; at R in {1, 10, 100} that happens only beyond n = 3
        for n in (2, 3):
            values = [explicit_bound_kneg1(n, 1.0, R) for R in (1.0, 10.0, 100.0)]
            assert all(a > b for a, b in zip(values, values[1:]))
            assert all(v >= n - 1 for v in values)
            assert values[-1] == pytest.approx(n - 1, abs=1e-12)
        for n in (4, 5):
            values = [explicit_bound_kneg1(n, 1.0, R) for R in (0.5, 1.0, 2.0, 4.0)]
            assert all(a > b for a, b in zip(values, values[1:]))
            assert explicit_bound_kneg1(n, 1.0, 100.0) == n - 1
            assert mckean_bound(n) == n - 1


class TestBallComparison:
    def test_flat_is_exactly_nh(self):
        assert ball_comparison_bound(3, 0.0, 2.0) == (6.0, 0.5)

    def test_hemisphere(self):
        q1bar, rbar = ball_comparison_bound(2, 1.0, 0.0)
        assert q1bar == pytest.approx(1.0, abs=1e-10)
        assert rbar == pytest.approx(math.pi / 2, abs=1e-15)

    def test_three_sphere_hemisphere(self):
        # oracle from the unit-sphere areas: 2 |S^2| / |S^3| = 8 pi / (2 pi^2)
        oracle = 2.0 * (4.0 * math.pi) / (2.0 * math.pi ** 2)
        q1bar, rbar = ball_comparison_bound(3, 1.0, 0.0)
        assert oracle == pytest.approx(4.0 / math.pi, rel=1e-15)
        assert q1bar == pytest.approx(oracle, abs=1e-10)
        assert rbar == pytest.approx(math.pi / 2, abs=1e-15)

    def test_hyperbolic_ball_attains_its_own_bound(self):
        q1bar, rbar = ball_comparison_bound(3, -1.0, 2.0)
        assert q1bar == pytest.approx(
            main_lower_bound(ThetaProfile(3, -1.0, 2.0), rbar), abs=1e-8)

    def test_unsupported_regimes(self):
        with pytest.raises(UnsupportedRegimeError):
            ball_comparison_bound(2, 0.0, 0.0)
        with pytest.raises(UnsupportedRegimeError):
            ball_comparison_bound(2, -1.0, 1.0)
        with pytest.raises(UnsupportedRegimeError):
            ball_comparison_bound(2, -1.0, 0.5)


class TestChengUpper:
    def test_disk(self):
        assert cheng_upper_bound(2, 0.0, 1.0) == pytest.approx(2.0, rel=1e-14)

    def test_hemisphere_matches_ball_comparison(self):
        assert cheng_upper_bound(2, 1.0, math.pi / 2) == pytest.approx(
            ball_comparison_bound(2, 1.0, 0.0)[0], abs=1e-12)

    def test_hyperbolic_ball_with_quadrature_oracle(self):
        denominator, err = integrate.quad(lambda t: math.sinh(t) ** 2, 0.0, 1.0,
                                          epsabs=1e-14, epsrel=1e-14)
        oracle = math.sinh(1.0) ** 2 / denominator
        assert err < 1e-12
        assert cheng_upper_bound(3, -1.0, 1.0) == pytest.approx(oracle, rel=1e-10)

    def test_domain_error(self):
        with pytest.raises(PreconditionError):
            cheng_upper_bound(2, 4.0, math.pi / 2)


class TestClassicalBounds:
    def test_unit_disk_all_tight(self):
        values = classical_bounds(2, 1.0, 1.0, width=2.0)
        assert values.payne == pytest.approx(1.0)
        assert values.wang_xia == pytest.approx(2.0)
        assert values.inner_radius_bound == pytest.approx(1.0)

    def test_triangle_width_versus_inner_radius(self):
        values = classical_bounds(2, 0.0, 1.0, width=3.0)
        assert values.payne == pytest.approx(2.0 / 3.0)
        assert values.wang_xia is None
        assert values.inner_radius_bound > values.payne

    def test_without_width(self):
        values = classical_bounds(3, 2.0, 0.5)
        assert values.payne is None
        assert values.wang_xia == pytest.approx(6.0)


class TestBoundReport:
    def test_unit_disk_everything_tight(self):
        report = bound_report(ThetaProfile(2, 0.0, 1.0), 1.0,
                              area=math.pi, perimeter=2.0 * math.pi, width=2.0)
        assert report.q1_lower == pytest.approx(2.0, abs=1e-12)
        assert report.isoperimetric_upper == pytest.approx(2.0, rel=1e-15)
        assert report.ball_comparison == pytest.approx(2.0, rel=1e-15)
        assert report.classical.wang_xia == pytest.approx(2.0)
        # inner radius attains the first zero, so the ball rigidity upper
        # bound applies and the sandwich pinches
        assert report.cheng_upper == pytest.approx(2.0, rel=1e-12)
        assert report.q1_lower <= report.isoperimetric_upper + 1e-9

    def test_flat_cylinder_has_no_upper(self):
        report = bound_report(ThetaProfile(2, 0.0, 0.0), 1.0)
        assert report.q1_lower == pytest.approx(1.0, abs=1e-14)
        assert report.isoperimetric_upper is None
        assert report.cheng_upper is None
        assert report.ball_comparison is None
        assert report.classical.inner_radius_bound == pytest.approx(1.0)

    def test_ellipse_report_with_derived_extras(self):
        # arclength oracle, independent of the package quadrature
        perimeter, err = integrate.quad(
            lambda t: math.hypot(2.0 * math.sin(t), math.cos(t)), 0.0, 2.0 * math.pi,
            epsabs=1e-13, epsrel=1e-13)
        assert err < 1e-10
        report = bound_report(ThetaProfile(2, 0.0, 0.25), 1.0,
                              area=2.0 * math.pi, perimeter=perimeter)
        assert report.q1_lower == pytest.approx(8.0 / 7.0, abs=1e-12)
        assert report.isoperimetric_upper == pytest.approx(
            perimeter / (2.0 * math.pi), rel=1e-14)
        assert report.isoperimetric_upper == pytest.approx(1.5419644251900397, rel=1e-12)

    def test_provenance_names_every_bound(self):
        report = bound_report(ThetaProfile(3, 0.0, 1.0), 0.5, area=1.0,
                              perimeter=4.0, width=1.5)
        tagged = {name for name, _ in report.provenance}
        assert {"q1Lower", "q1LowerClosedForm", "ballComparison",
                "isoperimetricUpper", "payne", "wangXia"} <= tagged
        assert all(tag for _, tag in report.provenance)

    def test_hyperbolic_report_uses_second_closed_form(self):
        report = bound_report(ThetaProfile(3, -1.0, 0.0), 1.0)
        assert report.q1_lower_closed_form == pytest.approx(
            explicit_bound_kneg1(3, 0.0, 1.0), rel=1e-14)
        assert report.classical is None

    def test_inconsistent_extras_rejected(self):
        with pytest.raises(PreconditionError):
            bound_report(ThetaProfile(2, 0.0, 1.0), 1.0, area=10.0, perimeter=1.0)

    def test_wire_format_omits_missing_bounds(self):
        wire = bound_report(ThetaProfile(2, 0.0, 0.0), 1.0).to_dict()
        assert "isoperimetricUpper" not in wire
        assert "chengUpper" not in wire
        assert wire["q1Lower"] == pytest.approx(1.0)
        assert isinstance(wire["provenance"], list)


class TestDominance:
    def test_wang_xia_refinement(self):
        for n in (2, 3, 4, 5):
            for H in (0.5, 1.0, 4.0):
                for t in (0.2, 0.5, 0.8, 1.0):
                    value = main_lower_bound(ThetaProfile(n, 0.0, H), t / H)
                    if t == 1.0:
                        assert value == pytest.approx(n * H, abs=1e-10)
                    else:
                        assert value > n * H

    def test_width_refinement(self):
        for R in (0.25, 1.0, 3.0):
            for width in (2.0 * R, 3.0 * R, 10.0 * R):
                assert 1.0 / R >= 2.0 / width
