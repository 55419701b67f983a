import click

import lietori
from lietori._shared import DEFAULT_BOX_RADIUS
from lietori.axioms import FAIL, report_passed, verify_axioms
from lietori.exceptions import LieToriError
from lietori.lietorus import construct

from lietori.console._shared import (
    CLICK_CONTEXT_SETTINGS, EXIT_FAILURE, abort, emit, init_color,
    model_params, read_model_file, summary,
)


@click.command(
    context_settings=CLICK_CONTEXT_SETTINGS,
)
@click.argument(
    'path',
    type=click.Path(dir_okay=False),
)
@click.option(
    '--box',
    help='Sup-norm radius of the degree box to check.',
    type=click.IntRange(min=1),
    metavar='B',
    default=DEFAULT_BOX_RADIUS,
    show_default=True,
)
@click.option(
    '--color / --no-color',
    help='Print color output.',
    default=False,
    show_default=True,
)
@click.version_option(version=lietori.__version__)
def verify_cli(path, box, color):
    """
    Check the Lie torus axioms, centrelessness and the structural lemmas on
    a model file, degree by degree within a box. Exits with status 1 if any
    check fails.
    """
    init_color(color)

    try:
        params = model_params(read_model_file(path))
        report = verify_axioms(construct(params), box)
    except LieToriError as e:
        abort(str(e), color=color)

    emit(report, color=color)

    failed = [name for name, result in report.items()
              if result['status'] == FAIL]
    if not report_passed(report):
        abort('{}: failed {}'.format(params.describe(), ', '.join(failed)),
              exit_code=EXIT_FAILURE, color=color)

    summary(params.describe(), 'all checks passed', color=color)


if __name__ == '__main__':
    verify_cli()
