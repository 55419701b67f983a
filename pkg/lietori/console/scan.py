import click

import lietori
from lietori._shared import DEFAULT_SCAN_BOUNDS
from lietori.classify import disjointness_scan, f_injectivity_scan

from lietori.console._shared import (
    CLICK_CONTEXT_SETTINGS, EXIT_FAILURE, abort, emit, init_color,
    parse_bounds, summary,
)


@click.command(
    context_settings=CLICK_CONTEXT_SETTINGS,
)
@click.option(
    '--k-max',
    help='Largest k for the injectivity check of the symplectic rank '
         'function.',
    type=click.IntRange(min=2),
    metavar='N',
    default=12,
    show_default=True,
)
@click.option(
    '--bounds',
    help='Parameter bound KEY=N of the classical Lie tori compared '
         '(repeatable). KEY is one of r, k, p, q, m, zeta; defaults are '
         '{}.'.format(', '.join(
             '{}={}'.format(key, bound)
             for key, bound in DEFAULT_SCAN_BOUNDS.items())),
    metavar='KEY=N',
    multiple=True,
    callback=parse_bounds,
)
@click.option(
    '--color / --no-color',
    help='Print color output.',
    default=False,
    show_default=True,
)
@click.version_option(version=lietori.__version__)
def scan_cli(k_max, bounds, color):
    """
    Check that the classical and exceptional classes of fgc centreless Lie
    tori are separated by their invariants, and that the long-root rank of
    the symplectic family determines its parameters. Exits with status 1 if
    either check fails.
    """
    init_color(color)

    disjointness = disjointness_scan(bounds)
    injectivity = f_injectivity_scan(k_max)

    emit({
        'disjointness': disjointness,
        'f_injectivity': injectivity,
    }, color=color)

    summary('forbidden collisions:', str(len(disjointness['forbidden'])),
            color=color)
    summary('allowed collisions:', str(len(disjointness['allowed'])),
            color=color)

    if not (disjointness['pass'] and injectivity['pass']):
        abort('scan failed', exit_code=EXIT_FAILURE, color=color)


if __name__ == '__main__':
    scan_cli()
