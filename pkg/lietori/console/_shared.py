import json
import sys
from typing import Dict, Optional

import click
import colorama
import pygments
import pygments.formatters
import pygments.lexers
import termcolor

from lietori._shared import (
    DEFAULT_SCAN_BOUNDS, MODEL_SCHEMA_VERSION, JSONSerializable,
)
from lietori.classify import ClosedFormInput
from lietori.exceptions import InvalidModelFile, LieToriError
from lietori.invariants import InvariantTuple
from lietori.lietorus import ConstructionParams


CLICK_CONTEXT_SETTINGS = {
    'max_content_width': 100,
    'help_option_names': ['--help'],
}

# Exit codes.
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def printable_json(contents: JSONSerializable, colorize: bool = False) -> str:
    """
    Converts JSON-serializable contents to a pretty-printed and optionally
    colorized output string. Keys are sorted so that identical contents
    always print identically.

    :param contents: Contents to generate printable string from.
    :param colorize: Whether to colorize the string.
    :return: Pretty-printed string representing the contents.
    """
    contents_printable = json.dumps(
        contents,
        sort_keys=True,
        indent=4,
        separators=(',', ': '),
        ensure_ascii=False,
    )

    if colorize:
        contents_printable = pygments.highlight(
            contents_printable,
            pygments.lexers.JsonLexer(),
            pygments.formatters.TerminalFormatter(),
        ).rstrip()

    return contents_printable


def emit(contents: JSONSerializable, color: bool = False) -> None:
    click.echo(printable_json(contents, colorize=color))


def init_color(color: bool) -> None:
    if color:
        colorama.init()  # Needed for Windows console.


def summary(message: str, highlight: Optional[str] = None,
            color: bool = False) -> None:
    """
    Print a human-readable line to stderr, with ``highlight`` in bold when
    color is on.
    """
    if highlight is not None:
        highlight = (
            termcolor.colored(highlight, attrs=['bold']) if color else highlight
        )
        message = '{} {}'.format(message, highlight)
    click.echo(message, err=True)


def abort(message: str, exit_code: int = EXIT_USAGE, color: bool = False):
    """
    Print an error message to stderr and exit.
    """
    click.echo(
        termcolor.colored(message, 'red') if color else message, err=True
    )
    sys.exit(exit_code)


def parse_bounds(ctx, param, values) -> Dict[str, int]:
    """
    Parse repeated ``KEY=N`` parameter bound options. Keys are those of
    ``DEFAULT_SCAN_BOUNDS``; a later option for the same key wins.
    """
    bounds = {}  # type: Dict[str, int]
    for value in values:
        key, _, bound = value.partition('=')
        key = key.strip().lower()
        if key not in DEFAULT_SCAN_BOUNDS:
            raise click.BadParameter(
                'unknown bound {!r}, expected one of {}'.format(
                    key, ', '.join(DEFAULT_SCAN_BOUNDS)))
        try:
            bounds[key] = int(bound)
        except ValueError:
            raise click.BadParameter(
                'expected {}=N with an integer N, got {!r}'.format(key, value))
        if bounds[key] < 0:
            raise click.BadParameter(
                'bound {} must not be negative, got {}'.format(key, bounds[key]))
    return bounds


# -----------------------------------------------------------------------------
# Model files.

def read_model_file(path: str) -> Dict:
    """
    Read and check a model file.

    :param path: Path to the file.
    :raise: :class:`lietori.exceptions.InvalidModelFile` if the file cannot
        be read, is not JSON or has the wrong schema version.
    :return: The document.
    """
    try:
        with open(path) as model_file:
            document = json.load(model_file)
    except (IOError, ValueError) as e:
        raise InvalidModelFile('cannot read model file {}: {}'.format(path, e))

    if not isinstance(document, dict) or 'params' not in document:
        raise InvalidModelFile('{}: not a model file'.format(path))
    if document.get('schema_version') != MODEL_SCHEMA_VERSION:
        raise InvalidModelFile('{}: unsupported schema version {!r}'.format(
            path, document.get('schema_version')))

    return document


def write_model_file(path: str, params_json: Dict,
                     invariants: Optional[InvariantTuple] = None) -> Dict:
    document = {
        'schema_version': MODEL_SCHEMA_VERSION,
        'params': params_json,
    }  # type: Dict
    if invariants is not None:
        document['invariants'] = invariants.to_json()

    try:
        with open(path, 'w') as model_file:
            model_file.write(printable_json(document) + '\n')
    except IOError as e:
        raise InvalidModelFile('cannot write model file {}: {}'.format(path, e))

    return document


def model_params(document: Dict) -> ConstructionParams:
    try:
        return ConstructionParams.from_json(document['params'])
    except LieToriError as e:
        raise InvalidModelFile(str(e))


def closed_form_input(argument: str) -> ClosedFormInput:
    """
    A model file path, or ``exc:ROW:NULLITY`` for an exceptional Lie torus.
    """
    if argument.lower().startswith('exc:'):
        try:
            _, row, nullity = argument.split(':')
            return ClosedFormInput.exceptional(int(row), int(nullity))
        except ValueError:
            raise InvalidModelFile(
                'expected exc:ROW:NULLITY, got {!r}'.format(argument))

    return ClosedFormInput.from_json(read_model_file(argument)['params'])
