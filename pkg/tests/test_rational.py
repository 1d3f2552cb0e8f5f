import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aglucas import (MultiplicityViolation, Polynomial, RationalFunction,
                     convex_hull_region, critical_points, distance,
                     from_points, log_derivative, log_derivative_values,
                     poly_derivative, poly_eval, poly_roots, rational_eval,
                     rational_product)
from conftest import match_multisets

Z2_MINUS_1 = Polynomial((-1, 0, 1))


def sorted_points(points):
    return sorted(points, key=lambda z: (round(z.real, 9), round(z.imag, 9)))


class TestPolyEval:
    def test_quadratic_at_two(self):
        assert poly_eval(Z2_MINUS_1, 2) == 3

    def test_quadratic_at_i(self):
        assert poly_eval(Z2_MINUS_1, 1j) == -2

    def test_constant(self):
        assert poly_eval(Polynomial((5,)), 123.4 - 5j) == 5


class TestPolyDerivative:
    def test_cube(self):
        assert poly_derivative(Polynomial((0, 0, 0, 1))).coefficients == (0, 0, 3)

    def test_constant_gives_zero(self):
        d = poly_derivative(Polynomial((7,)))
        assert d.is_zero

    def test_symmetric_quadratic_root_at_midpoint(self):
        d = poly_derivative(Z2_MINUS_1)
        roots = poly_roots(d)
        assert roots.points == (0j,)

    def test_degree_drops_by_one(self):
        p = Polynomial((3, 1, 4, 1, 5))
        assert poly_derivative(p).degree == p.degree - 1


class TestPolyRoots:
    def test_real_pair(self):
        pts = sorted_points(poly_roots(Z2_MINUS_1).points)
        assert pts[0] == pytest.approx(-1)
        assert pts[1] == pytest.approx(1)

    def test_imaginary_pair(self):
        pts = sorted_points(poly_roots(Polynomial((1, 0, 1))).points)
        assert match_multisets(pts, [1j, -1j], 1e-12)

    def test_wilkinson_style_recovery(self):
        p = Polynomial.from_roots([1, 2, 3, 4, 5])
        assert p.coefficients == (-120, 274, -225, 85, -15, 1)
        pts = sorted_points(poly_roots(p).points)
        for got, want in zip(pts, [1, 2, 3, 4, 5]):
            assert abs(got - want) < 1e-8

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            poly_roots(Polynomial((0,)))

    def test_roots_at_origin(self):
        p = Polynomial((0, 0, 0, 2))
        assert poly_roots(p).points == (0j, 0j, 0j)

    def test_residual_bound_random(self, rng):
        for _ in range(30):
            deg = int(rng.integers(1, 25))
            roots = rng.standard_normal(deg) + 1j * rng.standard_normal(deg)
            p = Polynomial.from_roots(roots)
            rs = poly_roots(p)
            rmax = max(1.0, max(abs(z) for z in rs.points))
            scale = 0.0
            for c in reversed(p.coefficients):
                scale = scale * rmax + abs(c)
            assert rs.residual <= 1e-12 * (deg + 1) * scale


class TestCriticalPoints:
    def test_symmetric_quadratic(self):
        f = from_points([1, -1], [])
        assert critical_points(f).points == (0j,)

    def test_moebius_has_none(self):
        f = RationalFunction((0,), (1,), 1)
        assert critical_points(f).points == ()

    def test_cubic_example_upper_half_plane(self):
        f = from_points([0, 1, 1j], [])
        pts = critical_points(f).points
        assert len(pts) == 2
        assert all(z.imag > 0 for z in pts)
        want = [0.5690355937288492 + 0.09763107293781749j,
                0.09763107293781749 + 0.5690355937288492j]
        assert match_multisets(pts, want, 1e-9)

    def test_multiple_zero_contributes_coincident_points(self):
        f = RationalFunction((2, 2, 2, 5), (), 1)
        pts = sorted_points(critical_points(f).points)
        assert match_multisets(pts[:2], [2, 2], 1e-9)
        assert pts[2] == pytest.approx(4.25)

    def test_double_pole_is_not_critical(self):
        f = RationalFunction((0,), (3, 3), 1)
        pts = critical_points(f).points
        for z in pts:
            assert abs(z - 3) > 1e-6

    def test_gauss_lucas_hull_random(self, rng):
        for _ in range(25):
            deg = int(rng.integers(2, 30))
            zeros = rng.uniform(-3, 3, deg) + 1j * rng.uniform(-3, 3, deg)
            hull = convex_hull_region(zeros)
            crit = critical_points(RationalFunction(tuple(zeros), (), 1))
            assert len(crit.points) == deg - 1
            for c in crit.points:
                assert distance(c, hull)[0] <= 1e-9


class TestLogDerivative:
    def test_repeated_zero_rejected(self):
        with pytest.raises(MultiplicityViolation):
            log_derivative(RationalFunction((0, 0), (), 1))

    def test_moebius_ratio(self):
        ld = log_derivative(RationalFunction((1,), (-1,), 1))
        assert ld.zeros == ()
        assert ld.scale == pytest.approx(2)
        assert match_multisets(ld.poles, [1, -1], 1e-12)

    def test_symmetric_quadratic(self):
        ld = log_derivative(from_points([1, -1], []))
        assert match_multisets(ld.zeros, [0], 1e-12)
        assert match_multisets(ld.poles, [1, -1], 1e-12)
        assert ld.scale == pytest.approx(2)

    def test_matches_critical_points_random(self, rng):
        for _ in range(20):
            nz = int(rng.integers(1, 8))
            npole = int(rng.integers(0, 4))
            pts = rng.standard_normal(nz + npole) * 2 + 2j * rng.standard_normal(nz + npole)
            f = RationalFunction(tuple(pts[:nz]), tuple(pts[nz:]), 1)
            ld = log_derivative(f)
            crit = critical_points(f)
            assert match_multisets(ld.zeros, crit.points, 1e-8)
            assert match_multisets(ld.poles, f.zeros + f.poles, 1e-12)
            # independent check: f'/f vanishes at every reported zero
            for z in ld.zeros:
                fz = log_derivative_values(f, z)
                witness = sum(1 / abs(z - w) for w in f.zeros + f.poles)
                assert abs(fz) <= 1e-8 * witness


class TestProductAndConstruction:
    def test_zero_pole_cancellation(self):
        a = RationalFunction((0,), (), 1)
        b = RationalFunction((), (0,), 1)
        prod = rational_product(a, b)
        assert prod.is_constant

    def test_union_of_zeros(self):
        prod = rational_product(RationalFunction((1,), (), 1),
                                RationalFunction((2,), (), 1))
        assert match_multisets(prod.zeros, [1, 2], 1e-12)

    def test_disjoint_zero_pole_union(self):
        prod = rational_product(RationalFunction((0, 1), (), 1),
                                RationalFunction((), (3,), 1))
        assert match_multisets(prod.zeros, [0, 1], 1e-12)
        assert match_multisets(prod.poles, [3], 1e-12)

    def test_from_points_monic_quadratic(self):
        f = from_points([1, -1], [])
        assert f.scale == 1
        assert f.numerator().coefficients == (-1, 0, 1)

    def test_from_points_cancellation(self):
        f = from_points([0], [0])
        assert f.is_constant

    def test_product_rule_identity_random(self, rng):
        for _ in range(5):
            a = RationalFunction(tuple(rng.standard_normal(3) + 1j * rng.standard_normal(3)),
                                 tuple(rng.standard_normal(1) + 1j * rng.standard_normal(1)), 1)
            b = RationalFunction(tuple(rng.standard_normal(2) + 1j * rng.standard_normal(2)),
                                 tuple(rng.standard_normal(2) + 1j * rng.standard_normal(2)), 1)
            prod = rational_product(a, b)
            ld = log_derivative(prod)
            samples = 5 * (rng.standard_normal(100) + 1j * rng.standard_normal(100)) + 4j
            lhs = rational_eval(ld, samples)
            rhs = log_derivative_values(a, samples) + log_derivative_values(b, samples)
            mask = np.abs(rhs) > 1e-12
            assert np.all(np.abs(lhs[mask] - rhs[mask]) <= 1e-8 * np.abs(rhs[mask]))


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=12), st.integers(min_value=0, max_value=10 ** 6))
def test_critical_count_polynomial(deg, seed):
    gen = np.random.default_rng(seed)
    zeros = gen.uniform(-2, 2, deg) + 1j * gen.uniform(-2, 2, deg)
    crit = critical_points(RationalFunction(tuple(zeros), (), 1))
    assert len(crit.points) == deg - 1


def test_scale_must_be_nonzero():
    with pytest.raises(ValueError):
        RationalFunction((), (), 0)


def test_rational_eval_product_form():
    f = RationalFunction((1, -1), (2j,), 3)
    z = 0.5 + 0.5j
    expected = 3 * (z - 1) * (z + 1) / (z - 2j)
    assert rational_eval(f, z) == pytest.approx(expected)
