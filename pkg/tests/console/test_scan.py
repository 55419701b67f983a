import json

import click.testing
import pytest

from lietori.console.scan import scan_cli


def _disjointness(passed):
    return {'pass': passed, 'forbidden': [], 'allowed': [{}, {}]}


class TestScan:
    """
    Test the lietori scan commandline tool.
    """
    def test_scan(self, mocker):
        mock_disjointness = mocker.patch(
            'lietori.console.scan.disjointness_scan',
            return_value=_disjointness(True))
        mock_injectivity = mocker.patch(
            'lietori.console.scan.f_injectivity_scan',
            return_value={'pass': True})

        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(
            scan_cli,
            ['--bounds', 'r=3', '--bounds', 'Q=1', '--bounds', 'zeta=4'],
        )

        assert result.exit_code == 0
        mock_disjointness.assert_called_once_with({'r': 3, 'q': 1, 'zeta': 4})
        mock_injectivity.assert_called_once_with(12)
        assert json.loads(result.stdout) == {
            'disjointness': _disjointness(True),
            'f_injectivity': {'pass': True},
        }
        assert 'allowed collisions: 2' in result.stderr

    def test_scan_fails(self, mocker):
        mocker.patch('lietori.console.scan.disjointness_scan',
                     return_value=_disjointness(False))
        mocker.patch('lietori.console.scan.f_injectivity_scan',
                     return_value={'pass': True})

        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(scan_cli)

        assert result.exit_code == 1

    def test_injectivity_fails(self, mocker):
        mocker.patch('lietori.console.scan.disjointness_scan',
                     return_value=_disjointness(True))
        mock_injectivity = mocker.patch(
            'lietori.console.scan.f_injectivity_scan',
            return_value={'pass': False})

        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(scan_cli, ['--k-max', '5'])

        assert result.exit_code == 1
        mock_injectivity.assert_called_once_with(5)

    def test_small_k_max(self):
        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(scan_cli, ['--k-max', '1'])

        assert result.exit_code == 2

    def test_default_bounds(self, mocker):
        mock_disjointness = mocker.patch(
            'lietori.console.scan.disjointness_scan',
            return_value=_disjointness(True))
        mocker.patch('lietori.console.scan.f_injectivity_scan',
                     return_value={'pass': True})

        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(scan_cli)

        assert result.exit_code == 0
        mock_disjointness.assert_called_once_with({})

    @pytest.mark.parametrize('bound', ['n=3', 'r', 'r=x', 'q=-1'])
    def test_bad_bounds(self, mocker, bound):
        """
        Test that unknown keys, missing or malformed values and negative
        bounds are usage errors.
        """
        mock_disjointness = mocker.patch(
            'lietori.console.scan.disjointness_scan')

        runner = click.testing.CliRunner(mix_stderr=False)
        result = runner.invoke(scan_cli, ['--bounds', bound])

        assert result.exit_code == 2
        mock_disjointness.assert_not_called()
