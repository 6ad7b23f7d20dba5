import math

import numpy as np
import pytest

from conftest import random_quaternion, random_series, random_unit
from quatregular import (
    DomainError,
    PreconditionError,
    Quaternion,
    Series,
    inf_norm_ball,
    mean_value_margin,
    regular_conjugate,
    slice_derivative,
    slice_norm,
    sphere_extrema,
    split_norm,
    sup_norm_ball,
)
from quatregular._arrays import coeff_rows, eval_rows, qmul_rows
from quatregular.quaternions import I, J, orthonormal_completion, sphere_sample


def brute_sphere_extrema(b, c, n=100000):
    """Oracle: scan |b + I c| over a dense sampled sphere."""
    units = np.array([(u.x1, u.x2, u.x3) for u in sphere_sample(n, seed=7)])
    iq = np.zeros((n, 4))
    iq[:, 1:] = units
    prod = qmul_rows(iq, np.broadcast_to(np.array(c.components), iq.shape))
    values = np.linalg.norm(np.array(b.components) + prod, axis=1)
    return float(values.min()), float(values.max())


class TestSphereExtrema:
    def test_constant_on_sphere(self, rng):
        b = random_quaternion(rng)
        low, high = sphere_extrema(b, Quaternion())
        assert low == high == b.modulus()

    def test_pure_swing(self, rng):
        c = random_quaternion(rng)
        low, high = sphere_extrema(Quaternion(), c)
        assert abs(low - c.modulus()) < 1e-14
        assert abs(high - c.modulus()) < 1e-14

    def test_unit_example(self):
        low, high = sphere_extrema(Quaternion(1), I)
        assert low == 0.0 and high == 2.0

    def test_against_brute_force(self, rng):
        for _ in range(10):
            b, c = random_quaternion(rng), random_quaternion(rng)
            low, high = sphere_extrema(b, c)
            blow, bhigh = brute_sphere_extrema(b, c)
            assert abs(high - bhigh) < 1e-3
            assert abs(low - blow) < 1e-3
            # the sampled values can never beat the closed form
            assert bhigh <= high + 1e-12
            assert blow >= low - 1e-12


class TestSupNormBall:
    def test_identity(self):
        for s in (0.0, 0.3, 0.77):
            assert abs(sup_norm_ball(Series((0, 1)), s).value - s) < 1e-13

    def test_square(self):
        report = sup_norm_ball(Series((0, 0, 1)), 0.5)
        assert abs(report.value - 0.25) < 1e-13

    def test_constant_closed_form(self, rng):
        a = random_quaternion(rng)
        report = sup_norm_ball(Series((a,)), 0.5)
        assert report.method == "closed-form"
        assert report.value == a.modulus()

    def test_monte_carlo_oracle(self):
        # q + q^2 j at radius 0.9: closed form max is 0.9 * (1 + 0.9) = 1.71,
        # attained where q j is real positive; a large boundary sample must agree
        f = Series((0, 1, J))
        report = sup_norm_ball(f, 0.9, theta_grid=2048)
        rng = np.random.default_rng(424242)
        pts = rng.standard_normal((1000000, 4))
        pts *= 0.9 / np.linalg.norm(pts, axis=1, keepdims=True)
        values = np.linalg.norm(eval_rows(coeff_rows(f), pts), axis=1)
        mc = float(values.max())
        assert abs(report.value - 1.71) < 1e-9
        assert abs(report.value - mc) < 1e-4
        assert mc <= report.value + 1e-12

    def test_domain_guard(self):
        with pytest.raises(DomainError):
            sup_norm_ball(Series((0, 1)), 1.0)

    def test_monotone(self, rng):
        f = random_series(rng, 6)
        values = [sup_norm_ball(f, s).value for s in np.linspace(0, 0.9, 40)]
        assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


class TestSliceNorm:
    def test_identity(self):
        assert abs(slice_norm(Series((0, 1)), I) - 1.0) < 1e-12

    def test_constant_j(self):
        assert abs(slice_norm(Series((J,)), I) - 1.0) < 1e-12

    def test_one_plus_qj(self):
        # F = 1 and G = z on the i slice: hypot(1, 1)
        value = slice_norm(Series((1, J)), I)
        assert abs(value - math.sqrt(2.0)) < 1e-12

    def test_j_independence(self, rng):
        for _ in range(10):
            f = random_series(rng, int(rng.integers(0, 7)))
            unit = random_unit(rng)
            j_unit, k_unit = orthonormal_completion(unit)
            angle = rng.uniform(0.2, 2.9)
            j_vec = (math.cos(angle) * np.array([j_unit.x1, j_unit.x2, j_unit.x3])
                     + math.sin(angle) * np.array([k_unit.x1, k_unit.x2, k_unit.x3]))
            from quatregular import UnitImaginary

            rotated = UnitImaginary.from_vector(*j_vec)
            assert abs(slice_norm(f, unit, j_unit=j_unit)
                       - slice_norm(f, unit, j_unit=rotated)) < 1e-10


class TestSplitNorm:
    def test_identity(self):
        report = split_norm(Series((0, 1)))
        assert abs(report.value - 1.0) < 1e-12

    def test_real_coefficients_single_slice(self, rng):
        coeffs = tuple(float(v) for v in rng.uniform(-1, 1, size=5))
        f = Series(coeffs)
        report = split_norm(f)
        assert report.resolution["sphere"] == 1
        assert abs(report.value - slice_norm(f, I)) < 1e-12

    def test_quadratic_j_analytic(self):
        # sup over slices of (1 + |alpha2|)^2 + |beta2|^2 for a2 = j is 4
        report = split_norm(Series((0, 1, J)))
        assert abs(report.value - 2.0) < 1e-9

    def test_conjugate_invariance(self, rng):
        for _ in range(5):
            f = random_series(rng, int(rng.integers(1, 6)))
            a = split_norm(f, samples=512)
            b = split_norm(regular_conjugate(f), samples=512)
            assert abs(a.value - b.value) <= max(2 * (a.certified_tol + b.certified_tol), 1e-8)

    def test_equivalence_with_uniform(self, rng):
        for _ in range(8):
            f = random_series(rng, int(rng.integers(1, 7)))
            split_report = split_norm(f.with_radius(0.9), samples=1024)
            ball_report = sup_norm_ball(f, 0.9)
            allowance = 2 * (split_report.certified_tol + ball_report.certified_tol) + 1e-9
            assert ball_report.value <= split_report.value + allowance
            assert ball_report.value >= math.sqrt(0.5) * split_report.value - allowance

    def test_homogeneity_and_triangle(self, rng):
        f = random_series(rng, 4)
        g = random_series(rng, 3)
        scaled = Series(tuple(a * (-2.5) for a in f.coeffs), f.radius)
        assert abs(split_norm(scaled, samples=256).value
                   - 2.5 * split_norm(f, samples=256).value) < 1e-12
        n = max(len(f.coeffs), len(g.coeffs))
        pad = lambda c: list(c) + [Quaternion()] * (n - len(c))
        h = Series(tuple(a + b for a, b in zip(pad(f.coeffs), pad(g.coeffs))), 1.0)
        assert (split_norm(h, samples=256).value
                <= split_norm(f, samples=256).value
                + split_norm(g, samples=256).value + 1e-10)

    def test_zero_norm_iff_zero(self):
        assert split_norm(Series((0, 0))).value == 0.0
        assert split_norm(Series((0, 1e-9))).value > 0.0


class TestInfNormBall:
    def test_identity_min_zero(self):
        assert inf_norm_ball(Series((0, 1)), 0.8).value < 1e-12

    def test_shifted_constant(self):
        # |2 + q| over |q| <= 0.5 has minimum 1.5
        report = inf_norm_ball(Series((2, 1)), 0.5)
        assert abs(report.value - 1.5) < 1e-9

    def test_conjugate_invariance(self, rng):
        for _ in range(5):
            f = random_series(rng, int(rng.integers(1, 6)))
            a = inf_norm_ball(f, 0.9)
            b = inf_norm_ball(regular_conjugate(f), 0.9)
            assert abs(a.value - b.value) <= max(2 * (a.certified_tol + b.certified_tol), 1e-9)


class TestMeanValue:
    def test_identity_equality_case(self):
        margin = mean_value_margin(Series((0, 1)), Quaternion(0.3, 0.1, 0, 0))
        assert abs(margin) < 1e-12

    def test_square_closed_form(self):
        margin = mean_value_margin(Series((0, 0, 1)), Quaternion(0.5))
        assert abs(margin - 1.5) < 1e-9

    def test_requires_vanishing_at_zero(self):
        with pytest.raises(PreconditionError, match="f\\(0\\) = 0"):
            mean_value_margin(Series((1, 1)), Quaternion(0.5))

    def test_property_sweep(self, rng):
        f = random_series(rng, 6, monic_shift=True)
        deriv_norm = split_norm(slice_derivative(f), samples=512).value
        from quatregular import evaluate

        for _ in range(200):
            q = random_quaternion(rng, 0.45)
            if q.modulus() < 1e-3:
                continue
            assert deriv_norm - evaluate(f, q).modulus() / q.modulus() >= -1e-9

    def test_remark_bound(self, rng):
        for _ in range(5):
            f = random_series(rng, int(rng.integers(1, 7)), monic_shift=True)
            deriv_norm = split_norm(slice_derivative(f), samples=512).value
            for s in (0.25, 0.6, 0.9):
                assert s * deriv_norm - sup_norm_ball(f, s).value >= -1e-9
