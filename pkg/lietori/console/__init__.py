import click

import lietori
from lietori._shared import configure_logging

from ._shared import CLICK_CONTEXT_SETTINGS
from .build import build_cli
from .decide_iso import decide_iso_cli
from .exceptional import exceptional_cli
from .invariants import invariants_cli
from .scan import scan_cli
from .tables import tables_cli
from .verify import verify_cli


@click.group(
    context_settings=CLICK_CONTEXT_SETTINGS,
)
@click.version_option(version=lietori.__version__)
def lietori_cli():
    """
    Build classical Lie tori, compute their invariants and compare them with
    the classification tables.

    Results are printed to stdout as JSON. Exit status is 0 on success, 1
    when a check fails and 2 for bad input.
    """
    configure_logging()


lietori_cli.add_command(build_cli, name='build')
lietori_cli.add_command(invariants_cli, name='invariants')
lietori_cli.add_command(verify_cli, name='verify')
lietori_cli.add_command(tables_cli, name='tables')
lietori_cli.add_command(decide_iso_cli, name='decide-iso')
lietori_cli.add_command(exceptional_cli, name='exceptional')
lietori_cli.add_command(scan_cli, name='scan')


# Workaround to avoid F401 "imported but unused" linter errors.
(
    build_cli,
    decide_iso_cli,
    exceptional_cli,
    invariants_cli,
    scan_cli,
    tables_cli,
    verify_cli,
)
