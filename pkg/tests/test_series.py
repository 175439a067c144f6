import random
from fractions import Fraction

import pytest

from conftest import I, rand_poly
from moyalmetric import (G, MetricSeries, ONE, P, PhaseSymbol,
                         UnsupportedKinetic, X, ZERO, assemble, residual,
                         solve_kinetic_ode, solve_metric_series)
from moyalmetric.rationals import GaussianRational

mono = PhaseSymbol.monomial


def kinetic_apply(f):
    """The homogeneous operator -2*i*hbar*p*d_x + hbar^2*d_x^2."""
    return (mono(-2 * I, p=1, hbar=1) * f.diff("x")
            + mono(1, hbar=2) * f.diff("x", 2))


FIRST_ORDER = (mono(GaussianRational(0, Fraction(3, 4)), x=1, p=-4, hbar=2)
               + mono(Fraction(-3, 4), x=2, p=-3, hbar=1)
               + mono(GaussianRational(0, Fraction(-1, 2)), x=3, p=-2)
               + mono(Fraction(1, 4), x=4, p=-1, hbar=-1))


class TestKineticSolve:
    def test_cubic_source(self):
        assert solve_kinetic_ode(-2 * I * X ** 3) == FIRST_ORDER

    def test_zero_source(self):
        assert solve_kinetic_ode(ZERO) == ZERO

    def test_constant_source(self):
        # single recursion step: i*x/(2*hbar*p)
        sol = solve_kinetic_ode(ONE)
        assert sol == mono(GaussianRational(0, Fraction(1, 2)), x=1, p=-1, hbar=-1)
        assert kinetic_apply(sol) == ONE

    def test_substitution_oracle_on_random_sources(self):
        rng = random.Random(11)
        for _ in range(30):
            rhs = rand_poly(rng, max_terms=4, max_x=5, min_p=-3, max_p=3,
                            min_h=-2, max_h=2, max_g=2)
            sol = solve_kinetic_ode(rhs)
            assert kinetic_apply(sol) == rhs
            assert not sol.coefficient()  # zero x-constant term
            assert sol.max_xdeg() <= rhs.max_xdeg() + 1

    def test_rejects_exponential_source(self):
        from moyalmetric import KERNEL_EXP

        with pytest.raises(ValueError):
            solve_kinetic_ode(PhaseSymbol.exponential(KERNEL_EXP))


class TestSolveMetricSeries:
    def test_first_order_row(self):
        series = solve_metric_series(I * X ** 3, 1)
        assert series.order(0) == ONE
        assert series.order(1) == FIRST_ORDER

    def test_zero_potential(self):
        series = solve_metric_series(ZERO, 4)
        assert series.order(0) == ONE
        assert all(not series.order(n) for n in range(1, 5))

    def test_determinism(self):
        a = solve_metric_series(I * X ** 3, 3)
        b = solve_metric_series(I * X ** 3, 3)
        assert a == b

    def test_residual_vanishes_through_truncation_order(self):
        n = 3
        series = solve_metric_series(I * X ** 3, n)
        r = residual(P ** 2 + I * G * X ** 3, series.assemble())
        assert all(k > n for k in r.g_slices())

    def test_hermitian_order_by_order(self):
        series = solve_metric_series(I * X ** 3, 3)
        assert series.assemble().is_hermitian()
        assert all(series.order(n).is_hermitian() for n in range(4))

    def test_hbar_singularity_depth(self):
        series = solve_metric_series(I * X ** 3, 3)
        for n in range(1, 4):
            assert series.order(n).min_hdeg() == -n

    def test_linear_potential(self):
        # the solver is not special-cased to the cubic model
        n = 4
        series = solve_metric_series(I * X, n)
        r = residual(P ** 2 + I * G * X, series.assemble())
        assert all(k > n for k in r.g_slices())
        assert series.assemble().is_hermitian()

    def test_rejects_bad_potentials(self):
        with pytest.raises(UnsupportedKinetic):
            solve_metric_series(X * P, 1)
        with pytest.raises(UnsupportedKinetic):
            solve_metric_series(G * X, 1)
        from moyalmetric import KERNEL_EXP

        with pytest.raises(UnsupportedKinetic):
            solve_metric_series(PhaseSymbol.exponential(KERNEL_EXP), 1)
        with pytest.raises(ValueError):
            solve_metric_series(I * X ** 3, 0)


class TestMetricSeries:
    def test_assemble_examples(self):
        assert MetricSeries({0: ONE}, 0).assemble() == ONE
        series = MetricSeries({0: ONE, 1: FIRST_ORDER}, 1)
        assert series.assemble() == ONE + FIRST_ORDER * mono(1, g=1)

    def test_assemble_reslice_round_trip(self):
        series = solve_metric_series(I * X ** 3, 3)
        again = MetricSeries.from_symbol(series.assemble(), 3)
        assert again == series
        assert assemble(series) == series.assemble()

    def test_validation(self):
        with pytest.raises(ValueError):
            MetricSeries({0: ONE, 1: G * X}, 1)  # entries must be g-free
        with pytest.raises(ValueError):
            MetricSeries({2: X}, 1)  # beyond max_order
        with pytest.raises(ValueError):
            MetricSeries.from_symbol(mono(1, g=2), 1)

    def test_missing_orders_are_zero(self):
        series = MetricSeries({0: ONE}, 3)
        assert series.order(2) == ZERO
