import random

import pytest
import sympy

from lietori.exceptions import LatticeError
from lietori.zlattice import (
    IntMatrix, Quotient, Sublattice, congruence_kernel, coset_representatives,
    mod2_rank, quotient_invariants, smith_normal_form,
)


def determinant(matrix):
    return sympy.Matrix(matrix.to_rows()).det()


class TestSmithNormalForm:
    """
    Test the Smith normal form.
    """
    def test_random_matrices(self):
        """
        Test U·m·V = S with U and V unimodular and S in Smith form, on 1000
        random small matrices.
        """
        rng = random.Random(1234)

        for _ in range(1000):
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            matrix = IntMatrix(rows, cols,
                               [rng.randint(-6, 6) for _ in range(rows * cols)])
            u, s, v = smith_normal_form(matrix)

            assert u @ matrix @ v == s
            assert abs(determinant(u)) == 1
            assert abs(determinant(v)) == 1

            for i in range(rows):
                for j in range(cols):
                    if i != j:
                        assert s[i, j] == 0

            diagonal = s.diagonal()
            assert all(d >= 0 for d in diagonal)
            for a, b in zip(diagonal, diagonal[1:]):
                assert (b == 0) if a == 0 else (b % a == 0)

    def test_known_form(self):
        """
        Test a matrix with invariant factors 2 and 6.
        """
        _, s, _ = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 6]]))
        assert s.diagonal() == [2, 6]

    def test_bad_shape(self):
        """
        Test that mismatched entries and products are rejected.
        """
        with pytest.raises(LatticeError):
            IntMatrix(2, 2, [1, 2, 3])
        with pytest.raises(LatticeError):
            IntMatrix.identity(2) @ IntMatrix.identity(3)


class TestSublattice:
    """
    Test sublattices of Z^n.
    """
    def test_membership(self):
        """
        Test membership and coordinates in 2Z x Z.
        """
        lattice = Sublattice.from_vectors(2, [(2, 0), (2, 1)])

        assert lattice.contains((4, 3))
        assert (1, 0) not in lattice
        assert lattice.rank == 2
        assert lattice.same_lattice(Sublattice.from_vectors(2, [(2, 0), (0, 1)]))

        basis = lattice.basis()
        coords = lattice.coordinates((4, 3))
        assert tuple(
            sum(c * b[i] for c, b in zip(coords, basis)) for i in range(2)
        ) == (4, 3)

        with pytest.raises(LatticeError):
            lattice.coordinates((1, 0))
        with pytest.raises(LatticeError):
            lattice.contains((1, 0, 0))

    def test_generator_length(self):
        """
        Test that generators of the wrong length are rejected.
        """
        with pytest.raises(LatticeError):
            Sublattice.from_vectors(2, [(1, 0, 0)])

    def test_reduce(self):
        """
        Test that reduction picks the listed coset representative.
        """
        lattice = Sublattice.from_vectors(2, [(2, 0), (0, 3)])
        representatives = coset_representatives(lattice)

        for x in range(-4, 5):
            for y in range(-4, 5):
                reduced = lattice.reduce((x, y))
                assert reduced in representatives
                assert lattice.contains((x - reduced[0], y - reduced[1]))

    def test_index(self):
        """
        Test the index of one lattice in another.
        """
        small = Sublattice.full(2).scaled(4)
        large = Sublattice.from_vectors(2, [(2, 0), (0, 2), (1, 1)])

        assert small.index_in() == 16
        assert small.index_in(large) == 8
        assert Sublattice.from_vectors(2, [(1, 0)]).index_in() is None


class TestQuotient:
    """
    Test quotient groups and coset enumeration.
    """
    def test_invariant_factors(self):
        """
        Test invariant factors of Z^3 / <2e1, 6e2, e1 + 3e2>, a free part,
        and a relative quotient.
        """
        gamma = Sublattice.from_vectors(3, [(2, 0, 0), (0, 6, 0), (1, 3, 0)])
        quotient = quotient_invariants(gamma)

        assert quotient == Quotient([6], free=1)
        assert quotient.order is None

        within = Sublattice.from_vectors(2, [(1, 0), (0, 2)])
        relative = quotient_invariants(Sublattice.full(2).scaled(4),
                                       within=within)
        assert relative == Quotient([2, 4])
        assert relative.order == 8

    def test_from_cyclic_orders(self):
        """
        Test normalization of cyclic orders into invariant factors.
        """
        assert Quotient.from_cyclic_orders([2, 3]) == Quotient([6])
        assert Quotient.from_cyclic_orders([4, 2]) == Quotient([2, 4])
        assert Quotient.from_cyclic_orders([]) == Quotient()

    def test_str_and_json(self):
        """
        Test the printed and JSON forms.
        """
        quotient = Quotient([2, 2, 4], free=1)

        assert str(quotient) == 'Z2^2 + Z4 + Z^1'
        assert str(Quotient()) == '0'
        assert quotient.to_json() == {'torsion': [2, 2, 4], 'free': 1}
        assert Quotient.from_json(quotient.to_json()) == quotient

        with pytest.raises(LatticeError):
            Quotient.from_json({'torsion': [2]})

    def test_coset_representatives(self):
        """
        Test that coset representatives are distinct modulo the sublattice,
        zero first, and as many as the index.
        """
        gamma = Sublattice.from_vectors(2, [(2, 1), (0, 4)])
        representatives = coset_representatives(gamma)

        assert representatives[0] == (0, 0)
        assert len(representatives) == quotient_invariants(gamma).order == 8
        for a in representatives:
            for b in representatives:
                if a != b:
                    assert not gamma.contains((a[0] - b[0], a[1] - b[1]))

    def test_relative_coset_representatives(self):
        """
        Test coset representatives of 4Z^2 inside <e1, 2e2>.
        """
        within = Sublattice.from_vectors(2, [(1, 0), (0, 2)])
        representatives = coset_representatives(
            Sublattice.full(2).scaled(4), within=within)

        assert len(representatives) == 8
        assert all(within.contains(r) for r in representatives)

    def test_infinite_quotient(self):
        """
        Test that an infinite quotient has no coset representatives.
        """
        with pytest.raises(LatticeError):
            coset_representatives(Sublattice.from_vectors(2, [(1, 0)]))


class TestCongruences:
    """
    Test congruence kernels and mod 2 ranks.
    """
    def test_congruence_kernel(self):
        """
        Test the kernel of λ -> cλ mod 3 for the commutation matrix of a
        quantum torus Q(ζ3).
        """
        kernel = congruence_kernel(IntMatrix.from_rows([[0, 1], [-1, 0]]), 3)

        assert kernel.same_lattice(Sublattice.full(2).scaled(3))

        with pytest.raises(LatticeError):
            congruence_kernel(IntMatrix.from_rows([[0, 1]]), 3)
        with pytest.raises(LatticeError):
            congruence_kernel(IntMatrix.identity(2), 0)

    def test_mod2_rank(self):
        """
        Test the Z_2-rank of integer vectors.
        """
        assert mod2_rank([]) == 0
        assert mod2_rank([(0, 0), (2, 4)]) == 0
        assert mod2_rank([(1, 0, 0), (0, 1, 0), (1, 1, 0), (3, 0, 2)]) == 2
        assert mod2_rank([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
                          (1, 1, 0)]) == 3
