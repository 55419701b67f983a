import json

import click.testing

from lietori.console.tables import tables_cli


def _report(match):
    return {
        'results': [{'params': {}, 'match': match}, {'params': {}, 'match': True}],
        'count': 2,
        'all_match': match,
    }


class TestTables:
    """
    Test the lietori tables commandline tool.
    """
    def test_tables(self, mocker):
        """
        Test that the whole grid is checked by default.
        """
        mock_run = mocker.patch('lietori.console.tables.run_tables',
                                return_value=_report(True))

        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(tables_cli)

        assert result.exit_code == 0
        assert len(mock_run.call_args[0][0]) == 70
        assert mock_run.call_args[1] == {'workers': None, 'verify': False}
        assert json.loads(result.stdout)['all_match']
        assert '2/2 models match' in result.stderr

    def test_family_filter(self, mocker):
        mock_run = mocker.patch('lietori.console.tables.run_tables',
                                return_value=_report(True))

        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(
            tables_cli,
            ['--family', 'sp', '--family', 'O', '--workers', '3', '--verify'],
        )

        assert result.exit_code == 0
        params_list = mock_run.call_args[0][0]
        assert {params.family for params in params_list} == {'SP', 'O'}
        assert len(params_list) == 27
        assert mock_run.call_args[1] == {'workers': 3, 'verify': True}

    def test_bounds(self, mocker):
        """
        Test that parameter bounds restrict the grid.
        """
        mock_run = mocker.patch('lietori.console.tables.run_tables',
                                return_value=_report(True))

        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(
            tables_cli, ['--family', 'sl', '--bounds', 'zeta=2'],
        )

        assert result.exit_code == 0
        params_list = mock_run.call_args[0][0]
        assert len(params_list) == 18
        assert all(order == 2 for params in params_list
                   for order, _ in params.quantum)

        result = runner.invoke(
            tables_cli, ['--bounds', 'r=2', '--bounds', 'q=0'],
        )

        assert result.exit_code == 0
        params_list = mock_run.call_args[0][0]
        assert params_list
        assert all(params.r <= 2 and params.q == 0 for params in params_list)
        assert 'O' not in {params.family for params in params_list}

    def test_bad_bounds(self, mocker):
        mock_run = mocker.patch('lietori.console.tables.run_tables')

        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(tables_cli, ['--bounds', 'rank=2'])

        assert result.exit_code == 2
        assert 'unknown bound' in result.stderr
        mock_run.assert_not_called()

    def test_mismatch(self, mocker):
        mocker.patch('lietori.console.tables.run_tables',
                     return_value=_report(False))

        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(tables_cli)

        assert result.exit_code == 1
        assert '1/2 models match' in result.stderr

    def test_bad_workers(self, mocker):
        mock_run = mocker.patch('lietori.console.tables.run_tables')

        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(tables_cli, ['--workers', '0'])

        assert result.exit_code == 2
        mock_run.assert_not_called()

    def test_run_small_family(self):
        """
        Test a real run over the orthogonal models.
        """
        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(tables_cli, ['--family', 'o', '--workers', '1'])

        assert result.exit_code == 0
        assert json.loads(result.stdout)['count'] == 3
