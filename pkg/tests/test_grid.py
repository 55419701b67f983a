from lietori._shared import DEFAULT_SCAN_BOUNDS
from lietori.classify import ClosedFormInput, closed_form_tuple
from lietori.grid import (
    acceptance_grid, centroid_instances, o_grid, sl_grid, sp_grid, su_grid,
    within_bounds,
)
from lietori.lietorus import ConstructionParams


class TestGrid:
    """
    Test the acceptance grid.
    """
    def test_counts(self):
        assert len(list(sl_grid())) == 30
        assert len(list(su_grid())) == 13
        assert len(list(sp_grid())) == 24
        assert len(list(o_grid())) == 3
        assert len(acceptance_grid()) == 70

    def test_bounds(self):
        """
        Test that the scan defaults keep the whole grid and that tighter
        bounds drop models outside them.
        """
        assert acceptance_grid(DEFAULT_SCAN_BOUNDS) == acceptance_grid()
        assert len(acceptance_grid({'zeta': 3})) == 70 - 6
        assert acceptance_grid({'r': 4, 'q': 2}) == acceptance_grid()
        assert [params.family for params in acceptance_grid({'r': 3})].count(
            'O') == 0

        bounds = dict(DEFAULT_SCAN_BOUNDS, m=1)
        unitary = ConstructionParams('SU', 1, p=2, m=2,
                                     delta=((0, 0), (1, 0)))
        assert not within_bounds(unitary, bounds)
        assert within_bounds(ConstructionParams('SL', 3), bounds)

    def test_order(self):
        families = [params.family for params in acceptance_grid()]

        assert families == ['SL'] * 30 + ['SU'] * 13 + ['SP'] * 24 + ['O'] * 3

    def test_admissible(self):
        """
        Test that every grid model and centroid instance has a closed form.
        """
        for params in acceptance_grid() + centroid_instances():
            closed_form_tuple(ClosedFormInput.from_params(params))

    def test_z4_factors(self):
        """
        Test that enough special unitary models have a Z4 in their quotient.
        """
        with_z4 = [
            params for params in su_grid()
            if 4 in closed_form_tuple(
                ClosedFormInput.from_params(params)).quotient.torsion
        ]

        assert len(with_z4) >= 2

    def test_centroid_instances(self):
        families = {params.family for params in centroid_instances()}

        assert families == {'SL', 'SU', 'SP', 'O'}

    def test_delta_configurations(self):
        deltas = {params.delta for params in su_grid()}

        assert len(deltas) >= 6
        assert all(params.m <= 5 and params.r <= 2 for params in su_grid())
