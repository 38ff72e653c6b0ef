"""Quartic locus: coefficients, classification, solving, sampling, Euclid case."""

import math

import numpy as np
import pytest

from apollonius.halfplane import AxisPoint, GeometryError, OnAxisError, OrderingError, equal_angle_residual
from apollonius.locus import (
    AxisCircle,
    HorizontalLine,
    LocusClass,
    TripleConfig,
    classify,
    coefficients,
    euclidean_equal_angle_residual,
    euclidean_locus,
    eval_quartic,
    sample_curve,
    samples_to_csv,
    solve_r2,
    theta_grid,
)

# the seven regimes at a=35, c=5, keyed by the middle height
REGIME_CASES = [
    (30.0, LocusClass.ABOVE_QUADRATIC),
    (25.0, LocusClass.QUADRATIC_HYPERBOLA),
    (20.0, LocusClass.BETWEEN_GEOMETRIC_AND_QUADRATIC),
    (math.sqrt(175.0), LocusClass.GEOMETRIC_CIRCLE),
    (10.0, LocusClass.BETWEEN_HARMONIC_AND_GEOMETRIC),
    (7.0, LocusClass.HARMONIC_LEMNISCATE),
    (6.0, LocusClass.BELOW_HARMONIC),
]


class TestConfigAndCoefficients:
    def test_ordering_enforced(self):
        with pytest.raises(OrderingError):
            TripleConfig(1, 2, 3)
        with pytest.raises(OrderingError):
            TripleConfig(3, 2, 0)

    def test_4_2_1(self):
        q = coefficients(TripleConfig(4, 2, 1))
        assert (q.alpha, q.beta, q.gamma) == (-9.0, 0.0, -144.0)

    def test_quadratic_boundary_alpha_vanishes(self):
        assert coefficients(TripleConfig(35, 25, 5)).alpha == 0.0

    def test_harmonic_boundary_gamma_vanishes(self):
        assert coefficients(TripleConfig(35, 7, 5)).gamma == 0.0

    def test_symbolic_b_membership_identity(self):
        # the point (0, b) satisfies the quartic identically
        import sympy as sp

        a, b, c = sp.symbols("a b c", positive=True)
        alpha = 2 * b**2 - a**2 - c**2
        beta = a**2 * c**2 - b**4
        gamma = b**2 * (2 * a**2 * c**2 - a**2 * b**2 - c**2 * b**2)
        expr = b**4 * alpha + 2 * b**2 * beta - gamma
        assert sp.expand(expr) == 0

    def test_b_membership_in_floats(self):
        for cfg in (TripleConfig(4, 2, 1), TripleConfig(35, 25, 5), TripleConfig(35, 7, 5)):
            assert eval_quartic(cfg, cfg.b, math.pi / 2) == 0.0
        cfg = TripleConfig(3.7, 1.9, 0.23)
        scale = abs(coefficients(cfg).gamma)
        assert abs(eval_quartic(cfg, cfg.b, math.pi / 2)) <= 1e-14 * scale


class TestEvalQuartic:
    def test_circle_zero_for_any_theta(self):
        cfg = TripleConfig(4, 2, 1)
        for theta in (0.3, 1.0, 2.5):
            assert eval_quartic(cfg, 2.0, theta) == pytest.approx(0.0, abs=1e-12)

    def test_hyperbola_relation(self):
        cfg = TripleConfig(35, 25, 5)
        for theta in (1.0, 1.4, 2.0):
            r = math.sqrt(625.0 / -math.cos(2 * theta))
            scale = abs(2 * r * r * coefficients(cfg).beta)
            assert abs(eval_quartic(cfg, r, theta)) <= 1e-14 * scale

    def test_mirror_symmetry(self):
        cfg = TripleConfig(9, 4, 1.5)
        for r, theta in ((2.0, 0.7), (11.0, 1.2), (0.3, 2.8)):
            left = eval_quartic(cfg, r, theta)
            right = eval_quartic(cfg, r, math.pi - theta)
            scale = max(abs(left), abs(right), 1.0)
            assert abs(left - right) <= 1e-12 * scale


class TestClassify:
    @pytest.mark.parametrize("b,expected", REGIME_CASES)
    def test_seven_regimes(self, b, expected):
        assert classify(TripleConfig(35.0, b, 5.0)) == expected

    def test_geometric_circle_example(self):
        assert classify(TripleConfig(4, 2, 1)) == LocusClass.GEOMETRIC_CIRCLE

    def test_exact_mode_on_integers(self):
        assert classify(TripleConfig(35, 25, 5), exact=True) == LocusClass.QUADRATIC_HYPERBOLA
        assert classify(TripleConfig(35, 7, 5), exact=True) == LocusClass.HARMONIC_LEMNISCATE

    def test_eps_widens_boundary(self):
        near = TripleConfig(35.0, 25.0 * (1 + 1e-8), 5.0)
        assert classify(near, eps=1e-12) == LocusClass.ABOVE_QUADRATIC
        assert classify(near, eps=1e-6) == LocusClass.QUADRATIC_HYPERBOLA

    def test_negative_eps_rejected(self):
        with pytest.raises(GeometryError):
            classify(TripleConfig(4, 2, 1), eps=-1.0)

    def test_means_strictly_ordered(self):
        for a, c in ((35.0, 5.0), (2.0, 1.0), (1000.0, 999.0)):
            h2 = 2 * a * a * c * c / (a * a + c * c)
            g2 = a * c
            q2 = (a * a + c * c) / 2
            assert h2 < g2 < q2


class TestSolveR2:
    def test_circle_single_root(self):
        assert solve_r2(TripleConfig(4, 2, 1), 1.0) == [4.0]

    def test_hyperbola_at_right_angle(self):
        roots = solve_r2(TripleConfig(35, 25, 5), math.pi / 2)
        assert roots == [625.0]

    def test_hyperbola_outside_window_empty(self):
        assert solve_r2(TripleConfig(35, 25, 5), math.pi / 8) == []

    def test_lemniscate(self):
        cfg = TripleConfig(35, 7, 5)
        assert solve_r2(cfg, math.pi / 4) == []
        assert solve_r2(cfg, math.pi / 2) == [49.0]

    def test_theta_domain_validated(self):
        with pytest.raises(GeometryError):
            solve_r2(TripleConfig(4, 2, 1), 0.0)
        with pytest.raises(GeometryError):
            solve_r2(TripleConfig(4, 2, 1), math.pi)

    def test_residual_contract(self):
        for b, _ in REGIME_CASES:
            cfg = TripleConfig(35.0, b, 5.0)
            q = coefficients(cfg)
            for theta in np.linspace(0.05, math.pi - 0.05, 37):
                for s in solve_r2(cfg, float(theta)):
                    bound = 1e-9 * max(abs(q.alpha) * s * s, abs(q.gamma), 1.0)
                    assert abs(eval_quartic(cfg, math.sqrt(s), float(theta))) <= bound

    def test_two_roots_in_oval_regimes(self):
        cfg = TripleConfig(35, 30, 5)  # above the quadratic mean: closed oval
        roots = solve_r2(cfg, math.pi / 2)
        assert len(roots) == 2
        assert roots[0] < roots[1]

    def test_homogeneity(self):
        cfg = TripleConfig(9, 4, 1.5)
        lam = 3.7
        for theta in (0.6, 1.1, 2.4):
            base = solve_r2(cfg, theta)
            scaled = solve_r2(cfg.scaled(lam), theta)
            assert len(base) == len(scaled)
            for s, t in zip(base, scaled):
                assert t == pytest.approx(lam * lam * s, rel=1e-12)


class TestSampleCurve:
    def test_circle_sample_count_and_radius(self):
        samples = sample_curve(TripleConfig(4, 2, 1), 100)
        assert len(samples) == 100
        assert all(s.r == pytest.approx(2.0, abs=1e-13) for s in samples)

    def test_hyperbola_window(self):
        samples = sample_curve(TripleConfig(35, 25, 5), 100)
        assert samples
        assert all(math.pi / 4 < s.theta < 3 * math.pi / 4 for s in samples)

    def test_sorted_by_theta_then_r(self):
        samples = sample_curve(TripleConfig(35, 30, 5), 64)
        keys = [(s.theta, s.r) for s in samples]
        assert keys == sorted(keys)

    def test_scaling_moves_r_only(self):
        lam = 2.5
        base = sample_curve(TripleConfig(9, 4, 1.5), 50)
        scaled = sample_curve(TripleConfig(9, 4, 1.5).scaled(lam), 50)
        assert len(base) == len(scaled)
        for s, t in zip(base, scaled):
            assert t.theta == s.theta
            assert t.r == pytest.approx(lam * s.r, rel=1e-12)

    def test_grid_margins(self):
        grid = theta_grid(8)
        assert grid[0] == pytest.approx(math.pi / 32, rel=1e-15)
        assert grid[-1] == pytest.approx(math.pi - math.pi / 32, rel=1e-15)
        with pytest.raises(GeometryError):
            theta_grid(1)

    def test_points_satisfy_angle_oracle(self):
        cfg = TripleConfig(35, 10, 5)
        a, b, c = AxisPoint(35), AxisPoint(10), AxisPoint(5)
        for s in sample_curve(cfg, 64):
            assert abs(equal_angle_residual(s.point, a, b, c).value) <= 1e-9

    def test_off_curve_points_fail_oracle(self):
        cfg = TripleConfig(35, 10, 5)
        a, b, c = AxisPoint(35), AxisPoint(10), AxisPoint(5)
        for s in sample_curve(cfg, 16):
            for factor in (0.95, 1.05):
                off = s.point
                bumped = type(off)(off.x * factor, off.y * factor)
                assert abs(equal_angle_residual(bumped, a, b, c).value) > 1e-9

    def test_csv_serialization(self):
        samples = sample_curve(TripleConfig(4, 2, 1), 4)
        text = samples_to_csv(samples)
        lines = text.strip().split("\n")
        assert lines[0] == "theta,r,x,y"
        assert len(lines) == 5
        first = lines[1].split(",")
        assert float(first[1]) == pytest.approx(2.0, abs=1e-13)

    @pytest.mark.parametrize("b", [30.0, 25.0, 20.0, 7.0])
    def test_samples_meet_eval_invariant(self, b):
        cfg = TripleConfig(35.0, b, 5.0)
        q = coefficients(cfg)
        for s in sample_curve(cfg, 128):
            bound = 1e-9 * max(abs(q.alpha) * s.r**4, abs(q.gamma), 1.0)
            assert abs(eval_quartic(cfg, s.r, s.theta)) <= bound
            assert s.point.y > 0.0


class TestEuclideanLocus:
    def test_circle_4_2_1(self):
        locus = euclidean_locus(4, 2, 1)
        assert isinstance(locus, AxisCircle)
        assert locus.center_y == pytest.approx(0.0, abs=1e-14)
        assert locus.radius == pytest.approx(2.0, rel=1e-14)

    def test_line_when_b_is_midpoint(self):
        assert euclidean_locus(5, 3, 1) == HorizontalLine(height=3.0)

    def test_9_4_1(self):
        # y_d = (18 - 4 - 36)/(10 - 8) = -11
        locus = euclidean_locus(9, 4, 1)
        assert isinstance(locus, AxisCircle)
        assert locus.center_y == pytest.approx(-3.5, rel=1e-14)
        assert locus.radius == pytest.approx(7.5, rel=1e-14)

    def test_9_4_1_distance_ratio(self):
        # Apollonius property: PA/PC = AB/BC = 5/3 on the whole circle
        locus = euclidean_locus(9, 4, 1)
        for t in np.linspace(0.1, 2 * math.pi, 17):
            x = locus.radius * math.cos(t)
            y = locus.center_y + locus.radius * math.sin(t)
            pa = math.hypot(x, y - 9.0)
            pc = math.hypot(x, y - 1.0)
            assert pa / pc == pytest.approx(5.0 / 3.0, rel=1e-12)

    def test_ordering_only_no_positivity(self):
        # the flat-plane locus is defined for nonpositive heights too
        assert isinstance(euclidean_locus(2, 1, 0), HorizontalLine)

    def test_residual_zero_on_circle(self):
        assert euclidean_equal_angle_residual((2.0, 0.0), 4, 2, 1) == pytest.approx(0.0, abs=1e-15)

    def test_residual_zero_on_line(self):
        assert euclidean_equal_angle_residual((7.0, 3.0), 5, 3, 1) == pytest.approx(0.0, abs=1e-15)

    def test_residual_nonzero_off_circle(self):
        assert abs(euclidean_equal_angle_residual((3.0, 0.0), 4, 2, 1)) > 1e-3

    def test_residual_on_axis_rejected(self):
        with pytest.raises(OnAxisError):
            euclidean_equal_angle_residual((0.0, 5.0), 4, 2, 1)
