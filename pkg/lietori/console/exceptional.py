import click

import lietori
from lietori.classify import exceptional_lookup
from lietori.exceptions import LieToriError

from lietori.console._shared import (
    CLICK_CONTEXT_SETTINGS, abort, emit, init_color, summary,
)


@click.command(
    context_settings=CLICK_CONTEXT_SETTINGS,
)
@click.option(
    '--id', 'row_id',
    help='Row number (1 to 27).',
    type=int,
    metavar='N',
)
@click.option(
    '--type', 'root_type',
    help='Root-grading type, e.g. BC1 or G2.',
    metavar='TYPE',
)
@click.option(
    '--crk',
    help='Centroid rank.',
    type=int,
    metavar='N',
)
@click.option(
    '--color / --no-color',
    help='Print color output.',
    default=False,
    show_default=True,
)
@click.version_option(version=lietori.__version__)
def exceptional_cli(row_id, root_type, crk, color):
    """
    Print rows of the table of exceptional fgc centreless Lie tori, filtered
    by row number, root-grading type and centroid rank.
    """
    init_color(color)

    try:
        rows = exceptional_lookup(
            row_id=row_id,
            root_type=root_type.upper() if root_type else None,
            crk=crk,
        )
    except LieToriError as e:
        abort(str(e), color=color)

    if row_id is not None and not rows:
        abort('no exceptional row {}'.format(row_id), color=color)

    emit([row.to_json() for row in rows], color=color)
    summary('exceptional rows:', str(len(rows)), color=color)


if __name__ == '__main__':
    exceptional_cli()
