import pytest

from lietori.grid import acceptance_grid
from lietori.lietorus import ConstructionParams
from lietori.reproduce import check_model, run_tables


class TestCheckModel:
    """
    Test the comparison of one model against the closed form.
    """
    def test_match(self, sl3_qminus1_params):
        result = check_model(sl3_qminus1_params)

        assert result['match']
        assert result['params'] == sl3_qminus1_params.to_json()
        assert result['computed'] == result['closed_form']
        assert 'axioms' not in result

    def test_verify(self, sp6_params):
        result = check_model(sp6_params, verify=True, box_radius=1)

        assert result['match']
        assert list(result['axioms'])[0] == 'LT1'

    def test_failure_is_reported(self, mocker, o8_params):
        """
        Test that an error while computing becomes a mismatch carrying the
        message.
        """
        mocker.patch('lietori.reproduce.invariant_tuple',
                     side_effect=RuntimeError('boom'))

        result = check_model(o8_params)

        assert result == {
            'params': o8_params.to_json(),
            'computed': None,
            'closed_form': None,
            'match': False,
            'error': 'boom',
        }

    def test_mismatch(self, mocker, o8_params, sp6_params):
        from lietori.invariants import invariant_tuple
        from lietori.lietorus import construct

        mocker.patch('lietori.reproduce.invariant_tuple',
                     return_value=invariant_tuple(construct(sp6_params)))

        assert not check_model(o8_params)['match']


class TestRunTables:
    """
    Test running the comparison over a list of models.
    """
    def test_single_worker(self, sp6_params, o8_params):
        params_list = [sp6_params, o8_params, ConstructionParams('SL', 1)]

        report = run_tables(params_list, workers=1)

        assert report['count'] == 3
        assert report['all_match']
        assert [result['params'] for result in report['results']] == \
            [params.to_json() for params in params_list]

    def test_one_mismatch(self, mocker, sp6_params, o8_params):
        def fake_check(params):
            return {'params': params.to_json(), 'match': params.family == 'SP'}

        mocker.patch('lietori.reproduce.check_model', side_effect=fake_check)

        report = run_tables([sp6_params, o8_params], workers=1)

        assert report['count'] == 2
        assert not report['all_match']

    def test_default_grid(self, mocker):
        mocker.patch('lietori.reproduce.check_model',
                     side_effect=lambda params: {'match': True})

        report = run_tables(workers=1)

        assert report['count'] == 70
        assert report['all_match']


class TestAcceptanceGrid:
    """
    Test that every grid model's computed invariants equal the closed form.
    """
    @pytest.mark.parametrize('params', acceptance_grid(),
                             ids=lambda params: params.describe())
    def test_grid_model(self, params):
        result = check_model(params)

        assert result['match'], result
