"""
Reproduction harness: build each grid model, compute its invariants from
the construction and compare them with the closed-form tables.
"""
import logging
import multiprocessing
from typing import Dict, Iterable, List, Optional

from ._shared import DEFAULT_BOX_RADIUS, worker_count
from .axioms import report_passed, verify_axioms
from .classify import ClosedFormInput, closed_form_tuple
from .grid import acceptance_grid
from .invariants import invariant_tuple
from .lietorus import ConstructionParams, construct


_logger = logging.getLogger(__name__)


def check_model(params: ConstructionParams, verify: bool = False,
                box_radius: int = DEFAULT_BOX_RADIUS) -> Dict:
    """
    Compare the invariants computed from the construction with the closed
    form for one parameter set.

    A failure while building or computing is logged and reported as a
    mismatch carrying the error message.

    :param params: The construction parameters.
    :param verify: Also run the axiom checks.
    :param box_radius: Box radius for the axiom checks.
    :return: ``{"params", "computed", "closed_form", "match"}``, plus
        ``"axioms"`` when verifying.
    """
    result = {'params': params.to_json()}  # type: Dict
    try:
        model = construct(params)
        computed = invariant_tuple(model)
        expected = closed_form_tuple(ClosedFormInput.from_params(params))
    except Exception as e:
        _logger.exception('{}: invariant computation failed'.format(
            params.describe()))
        result.update(computed=None, closed_form=None, match=False,
                      error=str(e))
        return result

    match = computed == expected
    if not match:
        _logger.warning('{}: computed {} but closed form is {}'.format(
            params.describe(), computed, expected))

    result.update(computed=computed.to_json(), closed_form=expected.to_json(),
                  match=match)

    if verify:
        report = verify_axioms(model, box_radius)
        result['axioms'] = report
        result['match'] = match and report_passed(report)

    _logger.info('{}: {}'.format(params.describe(),
                                 'match' if result['match'] else 'MISMATCH'))
    return result


def _check_verified(params: ConstructionParams) -> Dict:
    return check_model(params, verify=True)


def run_tables(params_list: Optional[Iterable[ConstructionParams]] = None,
               workers: Optional[int] = None, verify: bool = False) -> Dict:
    """
    Run :func:`check_model` over a parameter list (the acceptance grid by
    default), in a process pool when more than one worker is requested.
    Results keep the order of the parameter list.

    :param params_list: Parameters to check.
    :param workers: Number of worker processes; ``None`` reads
        ``LIETORI_THREADS``.
    :param verify: Also run the axiom checks on every model.
    :return: ``{"results": [...], "count": n, "all_match": bool}``.
    """
    params_list = list(acceptance_grid() if params_list is None
                       else params_list)
    workers = worker_count(workers)
    check = _check_verified if verify else check_model

    _logger.info('checking {} models with {} worker(s)'.format(
        len(params_list), workers))

    if workers == 1:
        results = [check(params) for params in params_list]  # type: List[Dict]
    else:
        with multiprocessing.Pool(workers) as pool:
            results = list(pool.imap(check, params_list))

    return {
        'results': results,
        'count': len(results),
        'all_match': all(result['match'] for result in results),
    }
