import click

import lietori
from lietori.grid import acceptance_grid
from lietori.lietorus import FAMILIES
from lietori.reproduce import run_tables

from lietori.console._shared import (
    CLICK_CONTEXT_SETTINGS, EXIT_FAILURE, abort, emit, init_color,
    parse_bounds, summary,
)


@click.command(
    context_settings=CLICK_CONTEXT_SETTINGS,
)
@click.option(
    '--family',
    help='Only check models of this family (repeatable). Defaults to all.',
    type=click.Choice([f.lower() for f in FAMILIES], case_sensitive=False),
    multiple=True,
)
@click.option(
    '--bounds',
    help='Parameter bound KEY=N restricting the grid (repeatable). KEY is '
         'one of r, k, p, q, m, zeta; unset keys keep the scan defaults.',
    metavar='KEY=N',
    multiple=True,
    callback=parse_bounds,
)
@click.option(
    '--workers',
    help='Number of worker processes. Defaults to LIETORI_THREADS, then the '
         'CPU count.',
    type=click.IntRange(min=1),
    metavar='N',
)
@click.option(
    '--verify',
    help='Also check the axioms on every model.',
    is_flag=True,
)
@click.option(
    '--color / --no-color',
    help='Print color output.',
    default=False,
    show_default=True,
)
@click.version_option(version=lietori.__version__)
def tables_cli(family, bounds, workers, verify, color):
    """
    Reproduce the invariant tables.

    Builds every model of the parameter grid, computes its invariants from
    the construction and compares them with the closed forms. Exits with
    status 1 on any mismatch.
    """
    init_color(color)

    families = {f.upper() for f in family}
    params_list = [
        params for params in acceptance_grid(bounds)
        if not families or params.family in families
    ]

    report = run_tables(params_list, workers=workers, verify=verify)
    emit(report, color=color)

    matched = sum(1 for result in report['results'] if result['match'])
    message = '{}/{} models match'.format(matched, report['count'])
    if not report['all_match']:
        abort(message, exit_code=EXIT_FAILURE, color=color)

    summary('tables:', message, color=color)


if __name__ == '__main__':
    tables_cli()
