import click

import lietori
from lietori._shared import DEFAULT_COSET_BUDGET
from lietori.exceptions import LieToriError
from lietori.invariants import InvariantTuple, invariant_tuple
from lietori.lietorus import construct

from lietori.console._shared import (
    CLICK_CONTEXT_SETTINGS, EXIT_FAILURE, abort, emit, init_color,
    model_params, read_model_file, summary, write_model_file,
)


@click.command(
    context_settings=CLICK_CONTEXT_SETTINGS,
)
@click.argument(
    'path',
    type=click.Path(dir_okay=False),
)
@click.option(
    '--write',
    help='Store the computed invariants in the model file.',
    is_flag=True,
)
@click.option(
    '--coset-budget',
    help='Largest index of the centroid support to enumerate.',
    type=int,
    metavar='N',
    default=DEFAULT_COSET_BUDGET,
    show_default=True,
)
@click.option(
    '--color / --no-color',
    help='Print color output.',
    default=False,
    show_default=True,
)
@click.version_option(version=lietori.__version__)
def invariants_cli(path, write, coset_budget, color):
    """
    Compute the invariants of a model file.

    Prints the root-grading type, nullity, centroid rank, root-space rank
    vector and quotient grading group. When the file already holds cached
    invariants they are compared with the computed ones, and a disagreement
    exits with status 1.
    """
    init_color(color)

    try:
        document = read_model_file(path)
        params = model_params(document)
        computed = invariant_tuple(construct(params), coset_budget)
        cached = (
            InvariantTuple.from_json(document['invariants'])
            if 'invariants' in document and not write else None
        )
        if write:
            write_model_file(path, document['params'], computed)
    except LieToriError as e:
        abort(str(e), color=color)

    emit(computed.to_json(), color=color)
    summary(params.describe(), str(computed), color=color)

    if cached is not None and cached != computed:
        abort('cached invariants {} disagree with computed {}'.format(
            cached, computed), exit_code=EXIT_FAILURE, color=color)


if __name__ == '__main__':
    invariants_cli()
