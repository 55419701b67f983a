import random
from fractions import Fraction

import pytest
import sympy

from lietori.exactnum import (
    Cyclotomic, common_order, cyclotomic_polynomial, nullspace, rank,
    root_of_unity, row_reduce,
)
from lietori.exceptions import CyclotomicError


ORDERS = range(1, 25)


def random_element(rng, order):
    zeta = root_of_unity(order, 1)
    value = Cyclotomic.zero(order)
    for power in range(order):
        value = value + zeta ** power * Fraction(rng.randint(-3, 3),
                                                 rng.randint(1, 3))
    return value


class TestCyclotomicPolynomial:
    """
    Test the cyclotomic polynomials.
    """
    @pytest.mark.parametrize('order, expected', [
        (1, (-1, 1)),
        (2, (1, 1)),
        (3, (1, 1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (12, (1, 0, -1, 0, 1)),
    ])
    def test_known_polynomials(self, order, expected):
        """
        Test some small cyclotomic polynomials, lowest degree first.
        """
        assert cyclotomic_polynomial(order) == expected

    @pytest.mark.parametrize('order', range(1, 101))
    def test_degree_is_totient(self, order):
        """
        Test that Φ_M is monic of degree φ(M).
        """
        coeffs = cyclotomic_polynomial(order)

        assert len(coeffs) - 1 == int(sympy.totient(order))
        assert coeffs[-1] == 1

    @pytest.mark.parametrize('order', ORDERS)
    def test_primitive_root(self, order):
        """
        Test that ζ_M is a root of Φ_M of exact order M.
        """
        zeta = root_of_unity(order, 1)
        value = sum(
            (zeta ** i * c for i, c in enumerate(cyclotomic_polynomial(order))),
            Cyclotomic.zero(order),
        )

        assert value.is_zero
        assert zeta ** order == 1
        assert all(zeta ** k != 1 for k in range(1, order))

    def test_invalid_order(self):
        """
        Test that a nonpositive order is rejected.
        """
        with pytest.raises(CyclotomicError):
            cyclotomic_polynomial(0)
        with pytest.raises(CyclotomicError):
            Cyclotomic(0, [1])
        with pytest.raises(CyclotomicError):
            root_of_unity(-2, 1)


class TestCyclotomic:
    """
    Test arithmetic in Q(ζ_M).
    """
    @pytest.mark.parametrize('order', ORDERS)
    def test_field_axioms(self, order):
        """
        Test associativity, commutativity, distributivity and inverses on
        random elements.
        """
        rng = random.Random(order)
        one = Cyclotomic.one(order)

        for _ in range(5):
            a, b, c = (random_element(rng, order) for _ in range(3))

            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a - a == 0
            assert a * one == a
            if a:
                assert a * a.inverse() == one
                assert (b / a) * a == b

    def test_reduction(self):
        """
        Test that coefficient lists are reduced modulo Φ_M on construction.
        """
        assert Cyclotomic(4, [0, 0, 1]) == -1
        assert Cyclotomic(3, [1, 1, 1]).is_zero
        assert root_of_unity(6, 3) == -1
        assert root_of_unity(5, -1) == root_of_unity(5, 4)

    def test_scalars(self):
        """
        Test mixing with integers and fractions.
        """
        half = Cyclotomic.from_scalar(4, Fraction(1, 2))

        assert half * 2 == 1
        assert 1 - half == half
        assert Fraction(1, 4) + half == Fraction(3, 4)
        assert (half ** -2) == 4

    def test_embed(self):
        """
        Test moving elements into a larger cyclotomic field.
        """
        assert root_of_unity(2, 1).embed(4) == root_of_unity(4, 2)
        assert root_of_unity(3, 1).embed(6) == root_of_unity(6, 2)
        assert root_of_unity(4, 1).embed(12) == root_of_unity(12, 3)

        with pytest.raises(CyclotomicError):
            root_of_unity(3, 1).embed(4)

    def test_order_mismatch(self):
        """
        Test that elements of different orders are not combined silently.
        """
        with pytest.raises(CyclotomicError):
            root_of_unity(3, 1) + root_of_unity(4, 1)

        assert root_of_unity(3, 1) != root_of_unity(4, 1)

    def test_division_by_zero(self):
        """
        Test that inverting zero fails.
        """
        with pytest.raises(CyclotomicError):
            Cyclotomic.zero(5).inverse()
        with pytest.raises(CyclotomicError):
            Cyclotomic.one(5) / 0

    def test_hash(self):
        """
        Test that equal elements hash equally.
        """
        a = root_of_unity(8, 3) * root_of_unity(8, 5)
        assert a == Cyclotomic.one(8)
        assert hash(a) == hash(Cyclotomic.one(8))

    def test_json(self):
        """
        Test the JSON form and its validation.
        """
        half = Cyclotomic.from_scalar(4, Fraction(1, 2))

        assert half.to_json() == {'order': 4, 'coeffs': ['1/2', '0/1']}
        assert Cyclotomic.from_json(half.to_json()) == half

        with pytest.raises(CyclotomicError):
            Cyclotomic.from_json({'coeffs': ['1/2']})
        with pytest.raises(CyclotomicError):
            Cyclotomic.from_json({'order': 4, 'coeffs': ['half', '0']})

    def test_common_order(self):
        """
        Test the order of the smallest common field.
        """
        assert common_order([]) == 1
        assert common_order([2, 3]) == 6
        assert common_order([4, 6, 1]) == 12


class TestLinearAlgebra:
    """
    Test exact sparse Gaussian elimination.
    """
    def test_nullspace(self):
        """
        Test a one-dimensional solution space.
        """
        one = Cyclotomic.one(1)
        basis = nullspace([{0: one, 1: -one}], 2, 1)

        assert basis == [[one, one]]

    def test_rank_and_row_reduce(self):
        """
        Test rank over Q(i) with a dependent row.
        """
        i = root_of_unity(4, 1)
        one = Cyclotomic.one(4)
        rows = [
            {0: one, 1: i},
            {0: i, 1: -one},
            {1: one, 2: one},
        ]

        assert rank(rows) == 2

        pivots = row_reduce(rows)
        assert sorted(pivots) == [0, 1]
        assert all(row[col] == 1 for col, row in pivots.items())

    def test_nullspace_solutions(self):
        """
        Test that every nullspace vector solves the system.
        """
        zeta = root_of_unity(3, 1)
        one = Cyclotomic.one(3)
        rows = [{0: one, 1: zeta, 3: -one}, {1: one, 2: zeta * zeta}]
        basis = nullspace(rows, 4, 3)

        assert len(basis) == 2
        for vector in basis:
            for row in rows:
                total = sum((value * vector[col] for col, value in row.items()),
                            Cyclotomic.zero(3))
                assert total.is_zero
