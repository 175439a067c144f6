import numpy as np
import pytest

from moyalmetric import BadDimension, DimensionMismatch
from moyalmetric.finite import (DiscreteSymbol, basis_words, clock,
                                discrete_dagger, discrete_star, evaluate,
                                from_symbol, phase_angle, shift, to_symbol)

TOL = 1e-9
DIMS = (2, 3, 5, 8)


def random_matrix(rng, n):
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


class TestClockShift:
    def test_frozen_small_matrices(self):
        assert np.allclose(clock(2), np.diag([1.0, -1.0]), atol=1e-15)
        assert np.allclose(shift(2), np.array([[0, 1], [1, 0]]), atol=1e-15)
        w = np.exp(2j * np.pi / 3)
        assert np.allclose(clock(3), np.diag([1.0, w, w ** 2]), atol=1e-14)

    def test_shift_permutes_upward(self):
        h = shift(4)
        e0 = np.zeros(4)
        e0[0] = 1.0
        assert np.allclose(h @ e0, [0, 1, 0, 0])

    def test_bad_dimensions(self):
        for n in (1, 0, -3, 257):
            with pytest.raises(BadDimension):
                clock(n)
            with pytest.raises(BadDimension):
                shift(n)

    @pytest.mark.parametrize("n", DIMS)
    def test_weyl_relation(self, n):
        g, h = clock(n), shift(n)
        phi = phase_angle(n)
        assert np.max(np.abs(g @ h - np.exp(1j * phi) * h @ g)) < 1e-12

    @pytest.mark.parametrize("n", DIMS)
    def test_unitarity_and_periods(self, n):
        g, h = clock(n), shift(n)
        eye = np.eye(n)
        assert np.max(np.abs(g @ g.conj().T - eye)) < TOL
        assert np.max(np.abs(h @ h.conj().T - eye)) < TOL
        assert np.max(np.abs(np.linalg.matrix_power(g, n) - eye)) < TOL
        assert np.max(np.abs(np.linalg.matrix_power(h, n) - eye)) < TOL

    @pytest.mark.parametrize("n", DIMS)
    def test_trace_of_gh_vanishes(self, n):
        assert abs(np.trace(clock(n) @ shift(n))) < TOL

    @pytest.mark.parametrize("n", DIMS)
    def test_trace_orthogonality(self, n):
        words = basis_words(n)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    for d in range(n):
                        expected = n if (a, b) == (c, d) else 0.0
                        assert abs(np.vdot(words[a, b], words[c, d]) - expected) < TOL


class TestSymbolMaps:
    def test_identity_symbol(self):
        s = to_symbol(np.eye(3))
        expected = np.zeros((3, 3))
        expected[0, 0] = 1.0
        assert np.max(np.abs(s.coeffs - expected)) < TOL

    def test_clock_symbol(self):
        s = to_symbol(clock(4))
        assert abs(s.coefficient(1, 0) - 1.0) < TOL
        assert np.sum(np.abs(s.coeffs) > TOL) == 1

    def test_shift_from_symbol(self):
        coeffs = np.zeros((3, 3))
        coeffs[0, 1] = 1.0
        assert np.max(np.abs(from_symbol(DiscreteSymbol(coeffs)) - shift(3))) < TOL

    def test_zero_round_trip(self):
        assert np.max(np.abs(from_symbol(DiscreteSymbol(np.zeros((3, 3)))))) == 0.0

    @pytest.mark.parametrize("n", DIMS)
    def test_round_trip_random(self, n):
        rng = np.random.default_rng(n)
        for _ in range(10):
            A = random_matrix(rng, n)
            assert np.max(np.abs(from_symbol(to_symbol(A)) - A)) < TOL

    def test_hermitian_coefficients_give_hermitian_matrix(self):
        rng = np.random.default_rng(12)
        A = random_matrix(rng, 3)
        H = A + A.conj().T
        rebuilt = from_symbol(to_symbol(H))
        assert np.max(np.abs(rebuilt - rebuilt.conj().T)) < TOL

    def test_modular_coefficient_access(self):
        s = to_symbol(clock(4))
        assert abs(s.coefficient(-3, 0) - s.coefficient(1, 0)) < 1e-15


class TestDiscreteStar:
    def test_basis_product_without_phase(self):
        n = 5
        g, h = clock(n), shift(n)
        lhs = discrete_star(to_symbol(g), to_symbol(h))
        assert np.max(np.abs(lhs.coeffs - to_symbol(g @ h).coeffs)) < TOL

    def test_reversed_product_picks_up_phase(self):
        n = 5
        g, h = clock(n), shift(n)
        lhs = discrete_star(to_symbol(h), to_symbol(g))
        rhs = np.exp(-1j * phase_angle(n)) * to_symbol(g @ h).coeffs
        assert np.max(np.abs(lhs.coeffs - rhs)) < TOL

    @pytest.mark.parametrize("n", DIMS)
    def test_matrix_product_oracle(self, n):
        rng = np.random.default_rng(100 + n)
        for _ in range(10):
            A, B = random_matrix(rng, n), random_matrix(rng, n)
            lhs = discrete_star(to_symbol(A), to_symbol(B))
            assert np.max(np.abs(lhs.coeffs - to_symbol(A @ B).coeffs)) < TOL

    def test_associativity(self):
        n = 4
        rng = np.random.default_rng(77)
        for _ in range(10):
            a, b, c = (to_symbol(random_matrix(rng, n)) for _ in range(3))
            lhs = discrete_star(discrete_star(a, b), c)
            rhs = discrete_star(a, discrete_star(b, c))
            assert np.max(np.abs(lhs.coeffs - rhs.coeffs)) < TOL

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            discrete_star(to_symbol(np.eye(2)), to_symbol(np.eye(3)))


class TestDiscreteDagger:
    def test_clock_dagger(self):
        n = 5
        s = discrete_dagger(to_symbol(clock(n)))
        assert abs(s.coefficient(n - 1, 0) - 1.0) < TOL
        assert np.sum(np.abs(s.coeffs) > TOL) == 1

    def test_hermitian_fixed_point(self):
        rng = np.random.default_rng(8)
        A = random_matrix(rng, 4)
        H = A + A.conj().T
        s = to_symbol(H)
        assert np.max(np.abs(discrete_dagger(s).coeffs - s.coeffs)) < TOL

    def test_non_hermitian_moves(self):
        rng = np.random.default_rng(9)
        A = random_matrix(rng, 4)
        A[0, 1] += 1.0  # ensure asymmetry
        s = to_symbol(A)
        assert np.max(np.abs(discrete_dagger(s).coeffs - s.coeffs)) > 1e-6

    @pytest.mark.parametrize("n", DIMS)
    def test_conjugate_transpose_oracle(self, n):
        rng = np.random.default_rng(200 + n)
        for _ in range(10):
            A = random_matrix(rng, n)
            lhs = discrete_dagger(to_symbol(A))
            assert np.max(np.abs(lhs.coeffs - to_symbol(A.conj().T).coeffs)) < TOL

    def test_involution(self):
        rng = np.random.default_rng(13)
        s = to_symbol(random_matrix(rng, 5))
        twice = discrete_dagger(discrete_dagger(s))
        assert np.max(np.abs(twice.coeffs - s.coeffs)) < TOL


class TestEvaluate:
    def test_identity_everywhere_one(self):
        s = to_symbol(np.eye(4))
        for k in range(4):
            for l in range(4):
                assert abs(evaluate(s, k, l) - 1.0) < TOL

    def test_clock_value(self):
        n = 6
        s = to_symbol(clock(n))
        assert abs(evaluate(s, 1, 0) - np.exp(2j * np.pi / n)) < TOL

    def test_parseval(self):
        n = 5
        rng = np.random.default_rng(21)
        s = to_symbol(random_matrix(rng, n))
        grid = sum(abs(evaluate(s, k, l)) ** 2 for k in range(n) for l in range(n))
        assert abs(grid / n ** 2 - np.sum(np.abs(s.coeffs) ** 2)) < TOL
