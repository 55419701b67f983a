import click

import lietori
from lietori.exceptions import LieToriError
from lietori.lietorus import ConstructionParams, construct

from lietori.console._shared import (
    CLICK_CONTEXT_SETTINGS, abort, emit, init_color, summary, write_model_file,
)


def parse_quantum(ctx, param, values):
    """
    Parse repeated ``M:e`` quantum factor options into ``(M, e)`` pairs.
    """
    factors = []
    for value in values:
        try:
            order, e = (int(x) for x in value.split(':'))
        except ValueError:
            raise click.BadParameter(
                'expected M:e with integers M and e, got {!r}'.format(value))
        factors.append((order, e))
    return tuple(factors)


def parse_delta(ctx, param, value):
    """
    Parse ``"v1;v2;..."`` where each ``v`` is a comma-separated integer
    vector. An empty vector stands for the zero degree of a rank-0 torus.
    """
    if value is None:
        return ()
    try:
        return tuple(
            tuple(int(x) for x in chunk.split(',') if x.strip())
            for chunk in value.split(';')
        )
    except ValueError:
        raise click.BadParameter(
            'expected comma-separated integers separated by ";", '
            'got {!r}'.format(value))


@click.command(
    context_settings=CLICK_CONTEXT_SETTINGS,
)
@click.option(
    '--family',
    help='Classical family to construct.',
    type=click.Choice(['sl', 'su', 'sp', 'o'], case_sensitive=False),
    required=True,
)
@click.option(
    '--r',
    help='Rank of the matrix algebra.',
    type=int,
    metavar='N',
    required=True,
)
@click.option(
    '--quantum',
    help='Quantum torus factor Q(ζ_M^e) (sl only, repeatable).',
    metavar='M:e',
    multiple=True,
    callback=parse_quantum,
)
@click.option(
    '--q',
    help='Number of Laurent variables.',
    type=int,
    metavar='N',
    default=0,
    show_default=True,
)
@click.option(
    '--k',
    help='Number of (Q(-1),♮) factors of the involutive torus (su, sp).',
    type=click.IntRange(min=0),
    metavar='N',
    default=0,
    show_default=True,
)
@click.option(
    '--p',
    help='Last factor of the involutive torus: 0 for none, 1 for (R_1,♮), 2 '
         'for (Q(-1),*) (su, sp).',
    type=click.IntRange(min=0, max=2),
    metavar='N',
    default=0,
    show_default=True,
)
@click.option(
    '--m',
    help='Number of hermitian form entries (su). Defaults to the number of '
         'delta degrees.',
    type=int,
    metavar='N',
)
@click.option(
    '--delta',
    help='Hermitian form degrees (su).',
    metavar='"v1;v2;..."',
    callback=parse_delta,
)
@click.option(
    '--out',
    help='Model file to write.',
    type=click.Path(dir_okay=False, writable=True),
    metavar='PATH',
    required=True,
)
@click.option(
    '--color / --no-color',
    help='Print color output.',
    default=False,
    show_default=True,
)
@click.version_option(version=lietori.__version__)
def build_cli(family, r, quantum, q, k, p, m, delta, out, color):
    """
    Build a classical Lie torus model and write it to a model file.

    The parameters are checked by running the construction; inadmissible
    parameters exit with status 2 and the construction error message.
    """
    init_color(color)

    params = ConstructionParams(
        family=family.upper(),
        r=r,
        q=q,
        k=k,
        p=p,
        m=len(delta) if m is None else m,
        quantum=quantum,
        delta=delta,
    )

    try:
        construct(params)
        document = write_model_file(out, params.to_json())
    except LieToriError as e:
        abort(str(e), color=color)

    emit(document, color=color)
    summary('wrote', '{}: {}'.format(out, params.describe()), color=color)


if __name__ == '__main__':
    build_cli()
