"""
Closed-form invariants of the classical Lie tori, the table of exceptional
Lie tori, and the isomorphism decisions and disjointness scans built on
them.
"""
import collections
import enum
import functools
import itertools
import json
import logging
import math
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from ._shared import DEFAULT_SCAN_BOUNDS, EXCEPTIONAL_TABLE_FILE
from .exceptions import ConstructionError
from .invariants import InvariantTuple
from .lietorus import SP_EXCLUDED, ConstructionParams, construct
from .rootsys import RootTypeLabel
from .torus import Degree, involution_factor, involutive_product
from .zlattice import Quotient, mod2_rank


_logger = logging.getLogger(__name__)

EXCEPTIONAL = 'EXC'

# Exceptional rows that share type, centroid rank and rank vector.
EXCEPTIONAL_COLLISION_GROUPS = ((20, 22, 23), (21, 24))

# Centroid ranks of the exceptional rows of type A1, A2 and C3.
EXCEPTIONAL_CLASSICAL_TYPE_CRKS = (78, 133)


# -----------------------------------------------------------------------------
# Exceptional Lie tori.

class ExceptionalRow(NamedTuple):
    """
    One exceptional Lie torus, existing in each nullity ``n >= n0``. The
    quotient group does not depend on the nullity.
    """
    id: int
    root_type: RootTypeLabel
    n0: int
    crk: int
    rkv: Tuple[int, ...]
    quotient: Quotient
    index_string: str
    reference_string: str

    def invariants_at(self, nullity: int) -> InvariantTuple:
        if nullity < self.n0:
            raise ConstructionError(
                'exceptional Lie torus #{} needs nullity >= {}, got {}'.format(
                    self.id, self.n0, nullity))
        return InvariantTuple(self.root_type, nullity, self.crk, self.rkv,
                              self.quotient)

    def to_json(self) -> Dict:
        return {
            'id': self.id,
            'type': str(self.root_type),
            'n0': self.n0,
            'crk': self.crk,
            'rkv': list(self.rkv),
            'quotient': self.quotient.to_json(),
            'index': self.index_string,
            'reference': self.reference_string,
        }


@functools.lru_cache(maxsize=None)
def exceptional_rows() -> Tuple[ExceptionalRow, ...]:
    with open(EXCEPTIONAL_TABLE_FILE) as table_file:
        data = json.load(table_file)

    return tuple(
        ExceptionalRow(
            id=row['id'],
            root_type=RootTypeLabel.parse(row['type']),
            n0=row['n0'],
            crk=row['crk'],
            rkv=tuple(row['rkv']),
            quotient=Quotient(row['torsion']),
            index_string=row['index'],
            reference_string=row['reference'],
        )
        for row in data
    )


def exceptional_lookup(row_id: Optional[int] = None,
                       root_type: Optional[str] = None,
                       crk: Optional[int] = None) -> List[ExceptionalRow]:
    """
    Rows of the exceptional table matching every given filter.

    :param row_id: Row number, 1 to 27.
    :param root_type: Root-grading type such as ``'BC1'``.
    :param crk: Centroid rank.
    :return: The matching rows, in table order.
    """
    wanted_type = str(RootTypeLabel.parse(root_type)) if root_type else None
    return [
        row for row in exceptional_rows()
        if (row_id is None or row.id == row_id)
        and (wanted_type is None or str(row.root_type) == wanted_type)
        and (crk is None or row.crk == crk)
    ]


def _exceptional_row(row_id: int) -> ExceptionalRow:
    rows = exceptional_lookup(row_id=row_id)
    if not rows:
        raise ConstructionError('no exceptional Lie torus #{}'.format(row_id))
    return rows[0]


# -----------------------------------------------------------------------------
# Closed forms.

class ClosedFormInput(NamedTuple):
    """
    Parameters of a Lie torus for the closed-form tables: the construction
    parameters of a classical family, or ``family='EXC'`` with an exceptional
    ``row`` and a ``nullity``.
    """
    family: str
    r: int = 0
    q: int = 0
    k: int = 0
    p: int = 0
    m: int = 0
    quantum: Tuple[Tuple[int, int], ...] = ()
    delta: Tuple[Degree, ...] = ()
    row: int = 0
    nullity: int = 0

    @classmethod
    def from_params(cls, params: ConstructionParams) -> 'ClosedFormInput':
        return cls(params.family, params.r, params.q, params.k, params.p,
                   params.m, params.quantum, params.delta)

    @classmethod
    def exceptional(cls, row: int, nullity: int) -> 'ClosedFormInput':
        return cls(EXCEPTIONAL, row=row, nullity=nullity)

    @property
    def is_exceptional(self) -> bool:
        return self.family == EXCEPTIONAL

    def to_params(self) -> ConstructionParams:
        if self.is_exceptional:
            raise ConstructionError('exceptional Lie tori have no construction '
                                    'parameters')
        return ConstructionParams(self.family, self.r, self.q, self.k, self.p,
                                  self.m, self.quantum, self.delta)

    def validate(self) -> None:
        """
        :raise: :class:`lietori.exceptions.ConstructionError` for parameters
            that the construction rejects.
        """
        if self.is_exceptional:
            _exceptional_row(self.row).invariants_at(self.nullity)
        else:
            construct(self.to_params())

    @property
    def zeta_orders(self) -> List[int]:
        """
        Orders of the roots of unity of the quantum factors.
        """
        return [order // math.gcd(order, e) for order, e in self.quantum]

    @property
    def d(self) -> int:
        if self.family == 'SL':
            return functools.reduce(lambda x, y: x * y, self.zeta_orders, 1)
        if self.family in ('SU', 'SP'):
            return 2 ** (self.k + self.p // 2)
        return 1

    @property
    def s(self) -> int:
        if self.family == 'SL':
            return (self.r + 1) * self.d
        if self.family == 'SU':
            return (2 * self.r + self.m) * self.d
        return 2 * self.r * self.d

    @property
    def torus_nullity(self) -> int:
        if self.is_exceptional:
            return self.nullity
        if self.family == 'SL':
            return 2 * len(self.quantum) + self.q
        if self.family == 'O':
            return self.q
        return 2 * self.k + self.p + self.q

    def describe(self) -> str:
        if self.is_exceptional:
            return 'EXC #{} n={}'.format(self.row, self.nullity)
        return self.to_params().describe()

    def to_json(self) -> Dict:
        if self.is_exceptional:
            return {'family': EXCEPTIONAL, 'row': self.row,
                    'nullity': self.nullity}
        return self.to_params().to_json()

    @classmethod
    def from_json(cls, data: Dict) -> 'ClosedFormInput':
        if str(data.get('family', '')).upper() == EXCEPTIONAL:
            try:
                return cls.exceptional(int(data['row']), int(data['nullity']))
            except (KeyError, TypeError, ValueError) as e:
                raise ConstructionError(
                    'invalid exceptional parameters: {}'.format(e))
        return cls.from_params(ConstructionParams.from_json(data))


def _type_label(family: str, rank: int) -> RootTypeLabel:
    """
    Catalog label, with ``B1``, ``C1`` reported as ``A1`` and ``C2`` as
    ``B2``.
    """
    if rank == 1 and family in ('B', 'C'):
        return RootTypeLabel('A', 1)
    if rank == 2 and family == 'C':
        return RootTypeLabel('B', 2)
    return RootTypeLabel(family, rank, family != 'BC')


def _hatted(r: int, *entries: int) -> Tuple[int, ...]:
    """
    A rank vector whose second-to-last entry is dropped when ``r = 1``.
    """
    if r == 1 and len(entries) > 1:
        return entries[:-2] + entries[-1:]
    return entries


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _sl_tuple(inp: ClosedFormInput) -> InvariantTuple:
    d, s = inp.d, inp.s
    return InvariantTuple(
        _type_label('A', inp.r), inp.torus_nullity, s * s - 1, (d * d,),
        Quotient.from_cyclic_orders(
            o for o in inp.zeta_orders for _ in range(2)),
    )


def _su_tuple(inp: ClosedFormInput) -> InvariantTuple:
    r, k, p, m, d, s = inp.r, inp.k, inp.p, inp.m, inp.d, inp.s
    sign = _sign(k)

    if (k, p) == (0, 0):
        label = _type_label('B', r)
        rkv = (m,) if r == 1 else (m, 1)
    else:
        label = _type_label('BC', r)
        if p != 1:
            rkv = _hatted(r, m * d * d, d * d, d * (d - sign) // 2)
        else:
            rkv = _hatted(r, 2 * m * d * d, 2 * d * d, d * d)

    crk = s * s - 1 if p == 1 else s * (s - sign) // 2

    a = mod2_rank(inp.delta)
    b = mod2_rank([delta[:2 * k + p] for delta in inp.delta])
    quotient = Quotient.from_cyclic_orders(
        [2] * (2 * k + p + a - 2 * b) + [4] * b)

    return InvariantTuple(label, inp.torus_nullity, crk, tuple(rkv), quotient)


def _sp_tuple(inp: ClosedFormInput) -> InvariantTuple:
    r, k, p, d, s = inp.r, inp.k, inp.p, inp.d, inp.s
    sign = _sign(k)
    if p != 1:
        crk = s * (s + sign) // 2
        rkv = _hatted(r, d * d, d * (d + sign) // 2)
    else:
        crk = s * s - 1
        rkv = _hatted(r, 2 * d * d, d * d)
    return InvariantTuple(
        _type_label('C', r), inp.torus_nullity, crk, tuple(rkv),
        Quotient.from_cyclic_orders([2] * (2 * k + p)),
    )


def _o_tuple(inp: ClosedFormInput) -> InvariantTuple:
    s = inp.s
    return InvariantTuple(_type_label('D', inp.r), inp.torus_nullity,
                          s * (s - 1) // 2, (1,), Quotient())


_CLOSED_FORMS = {
    'SL': _sl_tuple,
    'SU': _su_tuple,
    'SP': _sp_tuple,
    'O': _o_tuple,
}


def closed_form_tuple(inp: ClosedFormInput) -> InvariantTuple:
    """
    The invariants of a Lie torus read off the closed-form tables.

    :param inp: Classical construction parameters or an exceptional row.
    :raise: :class:`lietori.exceptions.ConstructionError` for inadmissible
        parameters, as :func:`lietori.lietorus.construct` raises them.
    :return: The invariant tuple.
    """
    inp.validate()
    if inp.is_exceptional:
        return _exceptional_row(inp.row).invariants_at(inp.nullity)
    return _CLOSED_FORMS[inp.family](inp)


# -----------------------------------------------------------------------------
# The rank function of special symplectic Lie tori.

def f_value(k: int, p: int) -> int:
    """
    The long-root rank of a special symplectic Lie torus with parameters
    ``(k, p)``: ``d(d + (-1)^k)/2`` with ``d = 2^(k + p/2)`` for ``p != 1``,
    ``4^k`` for ``p = 1``.
    """
    if k < 0 or p not in (0, 1, 2):
        raise ValueError('f is defined for k >= 0 and p in (0, 1, 2), got '
                         '({}, {})'.format(k, p))
    if p == 1:
        return 4 ** k
    d = 2 ** (k + p // 2)
    return d * (d + _sign(k)) // 2


def f_injectivity_scan(k_max: int) -> Dict:
    """
    Check that ``f`` is 1 exactly on ``(0,0)``, ``(1,0)`` and ``(0,1)`` and
    one-to-one elsewhere, for ``k <= k_max``.
    """
    if k_max < 2:
        raise ValueError('k_max must be at least 2, got {}'.format(k_max))

    expected_ones = {(0, 0), (1, 0), (0, 1)}
    ones = []
    seen = {}  # type: Dict[int, Tuple[int, int]]
    collisions = []
    for k, p in itertools.product(range(k_max + 1), (0, 1, 2)):
        value = f_value(k, p)
        if value == 1:
            ones.append([k, p])
            continue
        if value in seen:
            collisions.append({'value': value,
                               'pairs': [list(seen[value]), [k, p]]})
        else:
            seen[value] = (k, p)

    passed = {tuple(x) for x in ones} == expected_ones and not collisions
    return {
        'k_max': k_max,
        'ones': ones,
        'collisions': collisions,
        'pass': passed,
    }


# -----------------------------------------------------------------------------
# Isomorphism decisions.

class Outcome(enum.Enum):
    ISOMORPHIC = 'ISOMORPHIC'
    NOT_ISOMORPHIC = 'NOT_ISOMORPHIC'
    UNDECIDED = 'UNDECIDED'


class Verdict(NamedTuple):
    outcome: Outcome
    reason: str
    # Whether the invariant comparison agrees with the parameter comparison,
    # for the families where both apply.
    cross_check: Optional[bool] = None

    def to_json(self) -> Dict:
        data = {'verdict': self.outcome.value, 'reason': self.reason}
        if self.cross_check is not None:
            data['cross_check'] = self.cross_check
        return data


def _normalized_quantum(inp: ClosedFormInput) -> Tuple[Tuple[int, int], ...]:
    factors = []
    for order, e in inp.quantum:
        g = math.gcd(order, e)
        factors.append((order // g, (e // g) % (order // g)))
    return tuple(factors)


def _same_parameters(a: ClosedFormInput, b: ClosedFormInput) -> bool:
    if a.family == 'SL':
        return (a.r, a.q, _normalized_quantum(a)) == \
            (b.r, b.q, _normalized_quantum(b))
    if a.family == 'SU':
        return (a.r, a.k, a.p, a.q, a.m, a.delta) == \
            (b.r, b.k, b.p, b.q, b.m, b.delta)
    if a.family == 'SP':
        return (a.r, a.k, a.p, a.q) == (b.r, b.k, b.p, b.q)
    return (a.r, a.q) == (b.r, b.q)


def _decide_exceptional(a: ClosedFormInput, b: ClosedFormInput,
                        ta: InvariantTuple, tb: InvariantTuple) -> Verdict:
    if not (a.is_exceptional and b.is_exceptional):
        return Verdict(Outcome.NOT_ISOMORPHIC,
                       'classical and exceptional Lie tori are disjoint')
    if a.row == b.row and a.nullity == b.nullity:
        return Verdict(Outcome.ISOMORPHIC, 'same exceptional Lie torus')
    if ta.key() != tb.key():
        return Verdict(Outcome.NOT_ISOMORPHIC, 'invariants differ: {} vs {}'
                       .format(ta, tb))
    return Verdict(
        Outcome.UNDECIDED,
        'rows {} and {} share type, nullity, centroid rank and rank vector; '
        'their quotient groups {} and {} differ, so they are not isotopic, '
        'but isomorphism is open'.format(a.row, b.row, ta.quotient,
                                         tb.quotient))


def decide_isomorphic(a: ClosedFormInput, b: ClosedFormInput) -> Verdict:
    """
    Decide whether two Lie tori are isomorphic, as far as the invariants
    and the known classification results allow.

    Special symplectic and orthogonal Lie tori are decided by their
    parameters, with the invariant comparison as a cross-check. Different
    classical constructions give disjoint classes. Special linear and
    special unitary pairs with equal invariants and different parameters are
    left undecided.

    :raise: :class:`lietori.exceptions.ConstructionError` for inadmissible
        inputs.
    """
    ta = closed_form_tuple(a)
    tb = closed_form_tuple(b)

    if a.is_exceptional or b.is_exceptional:
        return _decide_exceptional(a, b, ta, tb)

    if a.family != b.family:
        return Verdict(Outcome.NOT_ISOMORPHIC,
                       'constructions {} and {} give disjoint classes'.format(
                           a.family, b.family))

    same = _same_parameters(a, b)

    if a.family in ('SP', 'O'):
        if a.family == 'SP':
            invariants_equal = (ta.root_type, ta.nullity, ta.rkv) == \
                (tb.root_type, tb.nullity, tb.rkv)
        else:
            invariants_equal = (ta.root_type, ta.nullity) == \
                (tb.root_type, tb.nullity)
        if invariants_equal != same:
            _logger.error('{} vs {}: parameter and invariant comparisons '
                          'disagree'.format(a.describe(), b.describe()))
        if same:
            return Verdict(Outcome.ISOMORPHIC, 'same parameters',
                           invariants_equal)
        return Verdict(Outcome.NOT_ISOMORPHIC, 'different parameters',
                       not invariants_equal)

    if same:
        return Verdict(Outcome.ISOMORPHIC, 'same parameters')
    if ta.key() != tb.key():
        return Verdict(Outcome.NOT_ISOMORPHIC, 'invariants differ: {} vs {}'
                       .format(ta, tb))
    return Verdict(
        Outcome.UNDECIDED,
        'equal invariants; the isomorphism problem for construction {} is '
        'open beyond these invariants'.format(a.family))


# -----------------------------------------------------------------------------
# Disjointness.

@functools.lru_cache(maxsize=None)
def _hermitian_residues(k: int, p: int, q: int) -> Tuple[Degree, ...]:
    """
    Representatives in ``{0,1}^n`` of the hermitian degrees modulo ``2L``,
    zero first.
    """
    spec, inv = involutive_product(k, p, q)
    return tuple(
        d for d in itertools.product((0, 1), repeat=spec.rank)
        if involution_factor(spec, inv, d) > 0
    )


def classical_inputs(bounds: Dict[str, int]) -> Iterator[ClosedFormInput]:
    """
    Admissible classical parameters within ``bounds``. Special unitary
    inputs get the first ``m`` hermitian residues as their degrees, since
    the four isomorphism invariants do not depend on them.
    """
    r_max, k_max, q_max = bounds['r'], bounds['k'], bounds['q']
    m_max, zeta_max = bounds['m'], bounds['zeta']

    for r in range(1, r_max + 1):
        for count in range(k_max + 1):
            for orders in itertools.combinations_with_replacement(
                    range(2, zeta_max + 1), count):
                for q in range(q_max + 1):
                    yield ClosedFormInput('SL', r, q,
                                          quantum=tuple((o, 1) for o in orders))

    for r, k, p, q in itertools.product(range(1, r_max + 1), range(k_max + 1),
                                        (0, 1, 2), range(q_max + 1)):
        if not (r in (1, 2) and (k, p) in SP_EXCLUDED):
            yield ClosedFormInput('SP', r, q, k, p)

        residues = _hermitian_residues(k, p, q)
        for m in range(1, min(m_max, len(residues)) + 1):
            if (r, k, p) == (1, 0, 0) and m < 5:
                continue
            yield ClosedFormInput('SU', r, q, k, p, m, delta=residues[:m])

    for r in range(4, max(4, r_max) + 1):
        for q in range(q_max + 1):
            yield ClosedFormInput('O', r, q)


def _allowed(a: ClosedFormInput, b: ClosedFormInput) -> bool:
    """
    The one pattern where invariants of different classical constructions
    coincide: ``SL`` with ``r = 1`` against ``SP`` with ``r = 1, p = 1``.
    Their classes are separated by their central closures.
    """
    pair = sorted([a, b], key=lambda x: x.family)
    sl, sp = pair
    return (sl.family, sp.family) == ('SL', 'SP') and sl.r == 1 and \
        sp.r == 1 and sp.p == 1


def disjointness_scan(bounds: Optional[Dict[str, int]] = None) -> Dict:
    """
    Compare the four isomorphism invariants of every admissible classical
    Lie torus within ``bounds`` and of every exceptional row, at every
    nullity the classical side reaches.

    :param bounds: Maximum ``r``, ``k``, ``p``, ``q``, ``m`` and root of unity
        order (``zeta``); defaults to ``DEFAULT_SCAN_BOUNDS``.
    :return: The report, with ``pass`` true when no forbidden collision
        occurs, the arithmetic checks hold and the exceptional collisions are
        exactly the known groups, each separated by the quotient group.
    """
    bounds = dict(DEFAULT_SCAN_BOUNDS, **(bounds or {}))

    by_key = collections.defaultdict(list)
    classical_count = 0
    max_nullity = 0
    for inp in classical_inputs(bounds):
        invariants = closed_form_tuple(inp)
        by_key[invariants.key()].append((inp, invariants))
        classical_count += 1
        max_nullity = max(max_nullity, invariants.nullity)

    exceptional_count = 0
    for row in exceptional_rows():
        for n in range(row.n0, max(row.n0, max_nullity) + 1):
            inp = ClosedFormInput.exceptional(row.id, n)
            invariants = row.invariants_at(n)
            by_key[invariants.key()].append((inp, invariants))
            exceptional_count += 1

    forbidden = []
    allowed = []
    exceptional_groups = collections.defaultdict(set)
    separated = True
    for key, entries in sorted(by_key.items()):
        for (a, ta), (b, tb) in itertools.combinations(entries, 2):
            if a.family == b.family and not a.is_exceptional:
                continue
            collision = {
                'key': [key[0], key[1], key[2], list(key[3])],
                'pair': [a.to_json(), b.to_json()],
            }
            if a.is_exceptional and b.is_exceptional:
                if a.row == b.row:
                    continue
                exceptional_groups[(key[0], key[2], key[3])].update(
                    (a.row, b.row))
                if ta.quotient == tb.quotient:
                    separated = False
            elif a.is_exceptional or b.is_exceptional or not _allowed(a, b):
                _logger.warning('forbidden collision: {} and {}'.format(
                    a.describe(), b.describe()))
                forbidden.append(collision)
            else:
                allowed.append(collision)

    arithmetic = {
        str(crk): not any(s * s - 1 == crk for s in range(1, crk + 2))
        for crk in EXCEPTIONAL_CLASSICAL_TYPE_CRKS
    }
    groups = sorted(tuple(sorted(rows)) for rows in exceptional_groups.values())
    groups_match = groups == sorted(EXCEPTIONAL_COLLISION_GROUPS)

    return {
        'bounds': bounds,
        'classical_count': classical_count,
        'exceptional_count': exceptional_count,
        'forbidden': forbidden,
        'allowed': allowed,
        'no_square_minus_one': arithmetic,
        'exceptional_groups': [list(g) for g in groups],
        'exceptional_groups_separated': separated,
        'pass': (not forbidden and all(arithmetic.values()) and groups_match
                 and separated),
    }

