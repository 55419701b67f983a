import itertools

import numpy as np
import pytest

from lietori.exceptions import RootSystemError
from lietori.rootsys import (
    LengthClass, RootSet, RootTypeLabel, cartan_matrix_for, class_counts,
    classify, root_lattice_coords,
)


def unit(n, i, sign=1):
    return tuple(sign if j == i else 0 for j in range(n))


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def type_a(n):
    return [tuple(int(k == i) - int(k == j) for k in range(n + 1))
            for i in range(n + 1) for j in range(n + 1) if i != j]


def type_d(n):
    return [add(unit(n, i, s), unit(n, j, t))
            for i, j in itertools.combinations(range(n), 2)
            for s in (1, -1) for t in (1, -1)]


def type_b(n):
    return type_d(n) + [unit(n, i, s) for i in range(n) for s in (1, -1)]


def type_c(n):
    return type_d(n) + [unit(n, i, 2 * s) for i in range(n) for s in (1, -1)]


def type_bc(n):
    return type_b(n) + [unit(n, i, 2 * s) for i in range(n) for s in (1, -1)]


def type_g2():
    short = type_a(2)
    long = [tuple(3 * int(k == i) - 1 for k in range(3)) for i in range(3)]
    long += [tuple(-x for x in root) for root in long]
    return short + long


class TestClassify:
    """
    Test root system recognition.
    """
    @pytest.mark.parametrize('roots, ambient, expected', [
        (type_a(1), 2, 'A1'),
        (type_a(3), 4, 'A3'),
        (type_b(3), 3, 'B3'),
        (type_c(3), 3, 'C3'),
        (type_c(2), 2, 'B2'),
        (type_d(4), 4, 'D4'),
        (type_bc(1), 1, 'BC1'),
        (type_bc(3), 3, 'BC3'),
        (type_g2(), 3, 'G2'),
    ])
    def test_types(self, roots, ambient, expected):
        """
        Test that the standard root systems are recognized, with C2 reported
        as B2.
        """
        info = classify(RootSet(ambient, roots))

        assert str(info.label) == expected
        assert len(info.simple_roots) == info.label.rank
        assert len(info.positive_roots) * 2 == len(roots)

    @pytest.mark.parametrize('roots, ambient, expected', [
        (type_a(2), 3, 'A2'),
        (type_b(3), 3, 'B3'),
        (type_c(3), 3, 'C3'),
        (type_bc(2), 2, 'BC2'),
        (type_g2(), 3, 'G2'),
    ])
    def test_coordinate_symmetries(self, roots, ambient, expected):
        """
        Test that permuting coordinates or negating one of them leaves the
        recognized type unchanged.
        """
        for perm in itertools.permutations(range(ambient)):
            permuted = [tuple(root[i] for i in perm) for root in roots]
            info = classify(RootSet(ambient, permuted))
            assert str(info.label) == expected

        for flip in range(ambient):
            flipped = [
                tuple(-x if i == flip else x for i, x in enumerate(root))
                for root in roots
            ]
            info = classify(RootSet(ambient, flipped))
            assert str(info.label) == expected

    def test_cartan_matrix(self):
        """
        Test that the computed Cartan matrix has the catalog spectrum.
        """
        info = classify(RootSet(3, type_b(3)))
        catalog = cartan_matrix_for(RootTypeLabel('B', 3))

        assert np.allclose(np.sort(np.linalg.eigvals(info.cartan).real),
                           np.sort(np.linalg.eigvals(catalog).real))

    def test_length_classes(self):
        """
        Test short, long and extra-long roots of BC2.
        """
        info = classify(RootSet(2, type_bc(2)))

        assert info.classes_present() == [
            LengthClass.SHORT, LengthClass.LONG, LengthClass.EXTRA]
        assert info.roots_of_class(LengthClass.SHORT) == [
            (-1, 0), (0, -1), (0, 1), (1, 0)]
        assert len(info.roots_of_class(LengthClass.LONG)) == 4
        assert info.roots_of_class(LengthClass.EXTRA) == [
            (-2, 0), (0, -2), (0, 2), (2, 0)]
        assert len(info.indivisible()) == 8

    def test_reducible(self):
        """
        Test that D2 = A1 x A1, the root system of o_4, is rejected.
        """
        with pytest.raises(RootSystemError):
            classify(RootSet(2, type_d(2)))

    def test_invalid_root_sets(self):
        """
        Test empty, non-closed and non-negation-closed inputs.
        """
        with pytest.raises(RootSystemError):
            classify(RootSet(2, []))
        with pytest.raises(RootSystemError):
            classify(RootSet(2, [(1, 0), (-1, 0), (1, 1), (-1, -1)]))
        with pytest.raises(RootSystemError):
            RootSet(2, [(1, 0)])
        with pytest.raises(RootSystemError):
            RootSet(2, [(1, 0, 0), (-1, 0, 0)])

    def test_root_lattice_coords(self):
        """
        Test that every root has integer coordinates in the simple roots.
        """
        info = classify(RootSet(3, type_c(3)))
        simple, coords = root_lattice_coords(info)

        for root, coord in coords.items():
            assert tuple(
                sum(c * s[i] for c, s in zip(coord, simple)) for i in range(3)
            ) == root
            signs = {c > 0 for c in coord if c}
            assert len(signs) == 1


class TestLabels:
    """
    Test root type labels and root counts.
    """
    def test_parse(self):
        """
        Test parsing and printing labels.
        """
        assert RootTypeLabel.parse('BC2') == RootTypeLabel('BC', 2, False)
        assert str(RootTypeLabel.parse(' E7 ')) == 'E7'

        with pytest.raises(RootSystemError):
            RootTypeLabel.parse('X3')
        with pytest.raises(RootSystemError):
            RootTypeLabel.parse('C')

    @pytest.mark.parametrize('label, count', [
        ('A4', 20), ('B3', 18), ('C3', 18), ('D4', 24), ('E6', 72),
        ('E7', 126), ('E8', 240), ('F4', 48), ('G2', 12), ('BC1', 4),
        ('BC3', 24),
    ])
    def test_root_count(self, label, count):
        """
        Test the number of roots of each type, and that the length classes
        add up to it.
        """
        parsed = RootTypeLabel.parse(label)

        assert parsed.root_count == count
        assert sum(class_counts(parsed)) == count

    def test_class_counts(self):
        """
        Test the size of each length class.
        """
        assert class_counts(RootTypeLabel.parse('B3')) == [6, 12]
        assert class_counts(RootTypeLabel.parse('C3')) == [12, 6]
        assert class_counts(RootTypeLabel.parse('BC1')) == [2, 2]
        assert class_counts(RootTypeLabel.parse('BC2')) == [4, 4, 4]
