import click

import lietori
from lietori.classify import Outcome, decide_isomorphic
from lietori.exceptions import LieToriError

from lietori.console._shared import (
    CLICK_CONTEXT_SETTINGS, abort, closed_form_input, emit, init_color,
    summary,
)


@click.command(
    name='decide-iso',
    context_settings=CLICK_CONTEXT_SETTINGS,
)
@click.argument('first', metavar='A')
@click.argument('second', metavar='B')
@click.option(
    '--color / --no-color',
    help='Print color output.',
    default=False,
    show_default=True,
)
@click.version_option(version=lietori.__version__)
def decide_iso_cli(first, second, color):
    """
    Decide whether two Lie tori are isomorphic.

    A and B are model files, or exc:ROW:NULLITY for a row of the exceptional
    table at the given nullity. Prints ISOMORPHIC, NOT_ISOMORPHIC or
    UNDECIDED with a reason.
    """
    init_color(color)

    try:
        a = closed_form_input(first)
        b = closed_form_input(second)
        a.validate()
        b.validate()
        verdict = decide_isomorphic(a, b)
    except LieToriError as e:
        abort(str(e), color=color)

    emit(verdict.to_json(), color=color)
    summary('{} vs {}:'.format(a.describe(), b.describe()),
            verdict.outcome.value, color=color)

    if verdict.outcome is Outcome.UNDECIDED:
        summary('reason:', verdict.reason, color=color)


if __name__ == '__main__':
    decide_iso_cli()
