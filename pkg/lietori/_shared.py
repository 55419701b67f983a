import json
import logging
import logging.config
import os
import time
from typing import Dict, List, Optional, Union


# For typing.
JSONSerializable = Union[str, int, List, Dict, None]

LOGGING_CONFIG_FILE = os.path.join(
    os.path.dirname(__file__), 'data', 'logging.json'
)

EXCEPTIONAL_TABLE_FILE = os.path.join(
    os.path.dirname(__file__), 'data', 'exceptional.json'
)

MODEL_SCHEMA_VERSION = 1
DEFAULT_COSET_BUDGET = 256
DEFAULT_BOX_RADIUS = 2

# Parameter bounds for the classical side of the disjointness scan.
DEFAULT_SCAN_BOUNDS = {
    'r': 4,
    'k': 2,
    'p': 2,
    'q': 2,
    'm': 5,
    'zeta': 6,
}


def configure_logging(log_level=logging.INFO, config_file=LOGGING_CONFIG_FILE):
    """
    Configure logging. Configuration is retrieved from an external
    file (``data/logging.json`` in the lietori package), which can be
    overridden with ``config_file`` or with the ``LIETORI_LOGGING_CONFIG``
    environment variable.

    :param log_level: Log level to use. Defaults to ``'INFO'``.
    :param config_file: Path to the logging config file to use. Defaults to
        ``data/logging.json`` in the lietori package.
    """
    # Format timestamps in GMT, YYYY-MM-DDThh:mm:ss.sss
    logging.Formatter.converter = time.gmtime
    logging.Formatter.default_time_format = '%Y-%m-%dT%H:%M:%S'
    logging.Formatter.default_msec_format = '%s.%03d'

    use_basic_config = False

    try:
        config_file = os.environ['LIETORI_LOGGING_CONFIG']
    except KeyError:
        pass

    if os.path.exists(config_file):
        try:
            with open(config_file) as logging_config_handler:
                logging_config = json.load(logging_config_handler)

            logging.config.dictConfig(logging_config)
        except (IOError, ValueError) as e:
            use_basic_config = True
            logging.getLogger(__name__).warning(
                'error loading logging config: {}: {}'.format(config_file, e)
            )
    else:
        use_basic_config = True

    if use_basic_config:
        logging.basicConfig(level=log_level)


def worker_count(requested: Optional[int] = None) -> int:
    """
    Number of worker processes to use for parameter scans. An explicit
    ``requested`` value wins, then the ``LIETORI_THREADS`` environment
    variable, then the CPU count.

    :param requested: Explicit worker count (``None`` to look it up).
    :return: A worker count of at least 1.
    """
    if requested is not None:
        return max(1, requested)

    try:
        return max(1, int(os.environ['LIETORI_THREADS']))
    except (KeyError, ValueError):
        return max(1, os.cpu_count() or 1)
