"""
The parameter grid whose constructed invariants are checked against the
closed-form tables, and the models on which the centroid oracle is checked.
"""
import itertools
from typing import Dict, Iterator, List, Optional

from ._shared import DEFAULT_SCAN_BOUNDS
from .lietorus import SP_EXCLUDED, ConstructionParams


# Quantum factors (M, e) of the special linear grid: none, Q(-1), Q(ζ3),
# Q(ζ4) and Q(-1) ⊗ Q(-1).
SL_QUANTUM = (
    (),
    ((2, 1),),
    ((3, 1),),
    ((4, 1),),
    ((2, 1), (2, 1)),
)

# Special unitary configurations (r, k, p, q, delta). Hermitian degrees are
# 0 on the (Q(-1),♮) and (R_1,♮) factors, anything but (1,1) on (Q(-1),*)
# and anything on the Laurent factor, so b > 0 needs p = 2.
SU_CONFIGURATIONS = (
    (1, 0, 1, 0, ((0,),)),
    (1, 0, 1, 1, ((0, 0), (0, 1))),
    (1, 0, 2, 0, ((0, 0),)),
    (1, 0, 2, 0, ((0, 0), (1, 0))),
    (1, 0, 2, 1, ((0, 0, 0), (1, 0, 0), (0, 0, 1))),
    (1, 1, 0, 0, ((0, 0),)),
    (1, 1, 1, 0, ((0, 0, 0),)),
    (2, 0, 0, 0, ((),)),
    (2, 0, 0, 1, ((0,), (1,))),
    (2, 0, 0, 2, ((0, 0), (1, 0), (0, 1))),
    (2, 0, 1, 0, ((0,),)),
    (2, 0, 2, 0, ((0, 0), (0, 1))),
    (2, 1, 0, 0, ((0, 0),)),
)


def sl_grid() -> Iterator[ConstructionParams]:
    for r, quantum, q in itertools.product((1, 2, 3), SL_QUANTUM, (0, 1)):
        yield ConstructionParams('SL', r, q=q, quantum=quantum)


def sp_grid() -> Iterator[ConstructionParams]:
    for r, k, p, q in itertools.product((1, 2, 3), (0, 1), (0, 1, 2), (0, 1)):
        if r in (1, 2) and (k, p) in SP_EXCLUDED:
            continue
        yield ConstructionParams('SP', r, q=q, k=k, p=p)


def su_grid() -> Iterator[ConstructionParams]:
    for r, k, p, q, delta in SU_CONFIGURATIONS:
        yield ConstructionParams('SU', r, q=q, k=k, p=p, m=len(delta),
                                 delta=delta)


def o_grid() -> Iterator[ConstructionParams]:
    for q in (0, 1, 2):
        yield ConstructionParams('O', 4, q=q)


def within_bounds(params: ConstructionParams, bounds: Dict[str, int]) -> bool:
    """
    Whether ``params`` lies within the parameter bounds of a scan: maximum
    ``r``, ``k``, ``p``, ``q``, ``m`` and quantum factor order ``zeta``.
    """
    orders = [order for order, _ in params.quantum]
    return (
        params.r <= bounds['r'] and
        params.k <= bounds['k'] and
        params.p <= bounds['p'] and
        params.q <= bounds['q'] and
        params.m <= bounds['m'] and
        max(orders, default=1) <= bounds['zeta']
    )


def acceptance_grid(
        bounds: Optional[Dict[str, int]] = None) -> List[ConstructionParams]:
    """
    Every grid model, in a fixed order: special linear, special unitary,
    special symplectic, orthogonal.

    :param bounds: Parameter bounds restricting the grid, merged over
        ``DEFAULT_SCAN_BOUNDS`` (which the whole grid lies within).
    """
    bounds = dict(DEFAULT_SCAN_BOUNDS, **(bounds or {}))
    return [
        params
        for params in itertools.chain(sl_grid(), su_grid(), sp_grid(), o_grid())
        if within_bounds(params, bounds)
    ]


def centroid_instances() -> List[ConstructionParams]:
    """
    Models on which the centroid oracle is compared with the centroid
    support, covering all four families and a special unitary model with
    shifted degrees.
    """
    return [
        ConstructionParams('SL', 1),
        ConstructionParams('SL', 2, quantum=((2, 1),)),
        ConstructionParams('SP', 3, k=1),
        ConstructionParams('SP', 2, p=2),
        ConstructionParams('O', 4, q=1),
        ConstructionParams('SU', 1, p=2, m=2, delta=((0, 0), (1, 0))),
    ]
