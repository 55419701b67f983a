import pytest

from lietori.exceptions import (
    CosetBudgetExceeded, DegreeNotInLatticeError, InvariantError,
)
from lietori.grid import centroid_instances
from lietori.invariants import (
    InvariantTuple, centroid_dimension, centroid_oracle, centroid_support,
    invariant_tuple, oracle_mismatches, quotient_group, rank_l0_from_invariants,
    rank_of_rootspace, redundancy_check,
)
from lietori.lietorus import construct
from lietori.rootsys import RootTypeLabel
from lietori.zlattice import Quotient


class TestInvariantTuple:
    """
    Test the invariant tuple value type.
    """
    def test_json(self):
        """
        Test the JSON form.
        """
        invariants = InvariantTuple(
            RootTypeLabel.parse('C3'), 2, 66, (4, 1), Quotient([2, 2]))

        assert invariants.to_json() == {
            'type': 'C3',
            'nullity': 2,
            'crk': 66,
            'rkv': [4, 1],
            'quotient': {'torsion': [2, 2], 'free': 0},
        }
        assert InvariantTuple.from_json(invariants.to_json()) == invariants
        assert invariants.key() == ('C3', 2, 66, (4, 1))
        assert str(invariants) == '(C3, 2, 66, (4, 1), Z2^2)'

    @pytest.mark.parametrize('data', [
        {'type': 'C3', 'nullity': 2, 'crk': 66, 'rkv': [4, 1]},
        {'type': 'Q3', 'nullity': 2, 'crk': 66, 'rkv': [4, 1],
         'quotient': {'torsion': [], 'free': 0}},
        {'type': 'C3', 'nullity': 'two', 'crk': 66, 'rkv': [4, 1],
         'quotient': {'torsion': [], 'free': 0}},
    ])
    def test_invalid_json(self, data):
        """
        Test that malformed invariant JSON is rejected.
        """
        with pytest.raises(InvariantError):
            InvariantTuple.from_json(data)


class TestInvariantTupleFromConstruction:
    """
    Test invariants computed from the constructions.
    """
    def test_sp6(self, sp6_params):
        """
        Test sp_6 over the base field.
        """
        invariants = invariant_tuple(construct(sp6_params))

        assert invariants == InvariantTuple(
            RootTypeLabel.parse('C3'), 0, 21, (1, 1), Quotient())

    def test_sp_quaternion(self, sp_quaternion_params):
        """
        Test the special symplectic Lie torus over (Q(-1), standard
        involution).
        """
        invariants = invariant_tuple(construct(sp_quaternion_params))

        assert invariants.to_json() == {
            'type': 'C3',
            'nullity': 2,
            'crk': 66,
            'rkv': [4, 1],
            'quotient': {'torsion': [2, 2], 'free': 0},
        }

    def test_sl3_quantum(self, sl3_qminus1_params):
        """
        Test sl_3(Q(-1)).
        """
        invariants = invariant_tuple(construct(sl3_qminus1_params))

        assert invariants == InvariantTuple(
            RootTypeLabel.parse('A2'), 2, 35, (4,), Quotient([2, 2]))

    def test_o8(self, o8_params):
        """
        Test o_8.
        """
        invariants = invariant_tuple(construct(o8_params))

        assert invariants.key() == ('D4', 0, 28, (1,))
        assert invariants.quotient == Quotient()

    def test_su_shifted(self, su_shifted_params):
        """
        Test a special unitary Lie torus whose quotient has a Z4 factor.
        """
        invariants = invariant_tuple(construct(su_shifted_params))

        assert invariants == InvariantTuple(
            RootTypeLabel.parse('BC1'), 2, 28, (8, 1), Quotient([2, 4]))

    def test_coset_budget(self, sl3_qminus1_params):
        """
        Test that a quotient larger than the budget is refused.
        """
        with pytest.raises(CosetBudgetExceeded):
            invariant_tuple(construct(sl3_qminus1_params), coset_budget=3)


class TestRanks:
    """
    Test ranks of root spaces over the centroid.
    """
    def test_rank_of_rootspace(self, sl3_qminus1_params):
        """
        Test root space ranks of sl_3(Q(-1)), and the zero rank of a vector
        which is not a root.
        """
        model = construct(sl3_qminus1_params)

        assert rank_of_rootspace(model, (1, -1, 0)) == 4
        assert rank_of_rootspace(model, (0, 0, 0)) == 11
        assert rank_of_rootspace(model, (2, -2, 0)) == 0

        with pytest.raises(InvariantError):
            rank_of_rootspace(model, (1, -1))

    def test_redundancy(self, sp_quaternion_params):
        """
        Test that rank(L_0) is determined by type, centroid rank and rank
        vector.
        """
        model = construct(sp_quaternion_params)
        invariants = invariant_tuple(model)
        rank_l0 = rank_of_rootspace(model, model.zero_root)

        assert rank_l0_from_invariants(invariants) == rank_l0 == 66 - 12 * 4 - 6
        assert redundancy_check(invariants, rank_l0)
        assert not redundancy_check(invariants, rank_l0 + 1)

    def test_rank_vector_mismatch(self):
        """
        Test that a rank vector of the wrong length for its type is
        rejected.
        """
        invariants = InvariantTuple(
            RootTypeLabel.parse('C3'), 0, 21, (1,), Quotient())

        with pytest.raises(InvariantError):
            rank_l0_from_invariants(invariants)

    def test_quotient_group(self, su_shifted_params, o8_params):
        """
        Test the quotient grading group.
        """
        assert quotient_group(construct(su_shifted_params)) == Quotient([2, 4])
        assert quotient_group(construct(o8_params._replace(q=2))) == Quotient()


class TestCentroid:
    """
    Test the centroid oracle against the centroid support.
    """
    @pytest.mark.parametrize('params', centroid_instances())
    def test_oracle_matches_support(self, params):
        """
        Test that the centroid is one-dimensional exactly in the degrees of
        the centroid support, on a box of radius 2.
        """
        model = construct(params)
        dimensions = centroid_oracle(model, 2)

        assert oracle_mismatches(model, dimensions) == []
        assert dimensions[(0,) * model.nullity] == 1

    def test_support(self, sl3_qminus1_params):
        """
        Test the centroid support of sl_3(Q(-1)) and a degree outside it.
        """
        model = construct(sl3_qminus1_params)

        assert centroid_support(model).contains((2, 0))
        assert not centroid_support(model).contains((1, 0))
        assert centroid_dimension(model, (1, 0)) == 0
        assert centroid_dimension(model, (2, -2)) == 1

    def test_mismatches_reported(self, sl3_qminus1_params):
        """
        Test that a wrong dimension is reported with its expected value.
        """
        model = construct(sl3_qminus1_params)

        assert oracle_mismatches(model, {(1, 0): 1, (0, 0): 1}) == [
            {'degree': [1, 0], 'dim': 1, 'expected': 0},
        ]

    def test_invalid_requests(self, su_shifted_params):
        """
        Test a degree outside the grading group and a box radius of 0.
        """
        model = construct(su_shifted_params)

        with pytest.raises(DegreeNotInLatticeError):
            centroid_dimension(model, (0, 1))
        with pytest.raises(ValueError):
            centroid_oracle(model, 0)
