from fractions import Fraction

import pytest
from hypothesis import given

from conftest import gaussian_rationals, hbar_scalars
from moyalmetric import GaussianRational, HbarScalar

I = GaussianRational(0, 1)


class TestGaussianRational:
    def test_coercion_and_reduction(self):
        z = GaussianRational(Fraction(2, 4), Fraction(-3, -6))
        assert z.re == Fraction(1, 2) and z.im == Fraction(1, 2)
        assert GaussianRational(3) == 3
        assert GaussianRational.coerce(Fraction(1, 3)).re == Fraction(1, 3)

    def test_arithmetic(self):
        assert I * I == -1
        assert (GaussianRational(1, 2) * GaussianRational(3, -1)
                == GaussianRational(5, 5))
        assert GaussianRational(1, 1) / GaussianRational(1, 1) == 1
        assert 1 / I == -I
        assert I ** 4 == 1 and I ** -1 == -I

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational(1) / GaussianRational(0)

    @given(gaussian_rationals, gaussian_rationals, gaussian_rationals)
    def test_ring_axioms(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a

    @given(gaussian_rationals)
    def test_conjugation(self, z):
        assert z.conjugate().conjugate() == z
        assert (z * z.conjugate()).is_real
        assert (z * z.conjugate()).re == z.norm2()

    @given(gaussian_rationals)
    def test_division_inverts(self, z):
        if z:
            assert (z / z) == 1
            assert z * (1 / z) == 1

    def test_sqrt_examples(self):
        assert GaussianRational(4).sqrt() == 2
        assert GaussianRational(Fraction(9, 4)).sqrt() == Fraction(3, 2)
        assert GaussianRational(-9).sqrt() == 3 * I
        assert GaussianRational(0, 2).sqrt() == GaussianRational(1, 1)
        assert GaussianRational(3, 4).sqrt() == GaussianRational(2, 1)
        assert GaussianRational(2).sqrt() is None
        assert GaussianRational(1, 1).sqrt() is None

    @given(gaussian_rationals)
    def test_sqrt_of_square(self, z):
        root = (z * z).sqrt()
        assert root is not None
        assert root * root == z * z


class TestHbarScalar:
    def test_construction_merges_terms(self):
        s = HbarScalar([(1, 2), (1, 3), (0, 0)])
        assert s.terms == ((1, GaussianRational(5)),)
        assert not HbarScalar([(2, 0)])

    def test_ring_ops(self):
        a = HbarScalar([(0, 1), (1, 2)])
        b = HbarScalar([(-1, 3)])
        assert a * b == HbarScalar([(-1, 3), (0, 6)])
        assert a - a == HbarScalar()
        assert a.shifted(2) == HbarScalar([(2, 1), (3, 2)])

    def test_conjugate(self):
        s = HbarScalar([(-1, I * 2)])
        assert s.conjugate() == HbarScalar([(-1, I * -2)])

    def test_division(self):
        a = HbarScalar([(0, 1), (1, 2)])
        assert a / HbarScalar([(1, 2)]) == HbarScalar([(-1, Fraction(1, 2)), (0, 1)])
        with pytest.raises(ValueError):
            a / a

    def test_sqrt_examples(self):
        c = HbarScalar([(0, 3), (1, I)])
        assert (c * c).sqrt() in (c, -c)
        assert HbarScalar([(1, 1)]).sqrt() is None  # odd degree
        assert HbarScalar([(0, 2)]).sqrt() is None  # irrational leading part
        assert HbarScalar().sqrt() == HbarScalar()

    @given(hbar_scalars(), hbar_scalars())
    def test_distributive(self, a, b):
        assert a * (a + b) == a * a + a * b

    @given(hbar_scalars())
    def test_sqrt_of_square(self, s):
        sq = s * s
        root = sq.sqrt()
        assert root is not None
        assert root * root == sq
