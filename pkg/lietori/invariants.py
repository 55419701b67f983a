"""
Isomorphism and isotopy invariants of a model: root-grading type, nullity,
centroid rank, root-space rank vector and the quotient ``Λ/Γ(L)``.

Ranks over the centroid are computed by summing component dimensions over
coset representatives of ``Γ(L)`` in ``Λ``. The centroid itself has two
independent descriptions here: :func:`centroid_support` reads it off the
coordinate torus, :func:`centroid_oracle` solves for it degree by degree.
"""
import logging
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from ._shared import DEFAULT_COSET_BUDGET
from .exactnum import SparseRow, rank
from .exceptions import CosetBudgetExceeded, InvariantError, LieToriError
from .lietorus import LieTorusModel, MatElement, bracket, degree_box
from .rootsys import RootTypeLabel, class_counts, dot
from .torus import Degree
from .zlattice import Quotient, Sublattice, quotient_invariants


_logger = logging.getLogger(__name__)


class InvariantTuple(NamedTuple):
    """
    The invariants of a centreless Lie torus.

    ``rkv`` lists the rank of a short root space, then a long one, then an
    extra-long one, for the classes the root system has.
    """
    root_type: RootTypeLabel
    nullity: int
    crk: int
    rkv: Tuple[int, ...]
    quotient: Quotient

    def key(self) -> Tuple[str, int, int, Tuple[int, ...]]:
        """
        The four isomorphism invariants, without the quotient.
        """
        return str(self.root_type), self.nullity, self.crk, self.rkv

    def to_json(self) -> Dict:
        return {
            'type': str(self.root_type),
            'nullity': self.nullity,
            'crk': self.crk,
            'rkv': list(self.rkv),
            'quotient': self.quotient.to_json(),
        }

    @classmethod
    def from_json(cls, data: Dict) -> 'InvariantTuple':
        try:
            return cls(
                root_type=RootTypeLabel.parse(data['type']),
                nullity=int(data['nullity']),
                crk=int(data['crk']),
                rkv=tuple(int(x) for x in data['rkv']),
                quotient=Quotient.from_json(data['quotient']),
            )
        except (KeyError, TypeError, ValueError, LieToriError) as e:
            raise InvariantError('invalid invariant JSON {}: {}'.format(
                data, e))

    def __str__(self):
        return '({}, {}, {}, ({}), {})'.format(
            self.root_type, self.nullity, self.crk,
            ', '.join(str(x) for x in self.rkv), self.quotient)


# -----------------------------------------------------------------------------
# Centroid.

def centroid_support(model: LieTorusModel) -> Sublattice:
    """
    ``Γ(L)``: ``Γ(A)`` for ``SL``, ``Γ(A,-)`` for ``SP`` (doubled for
    ``SU``), the whole of ``Z^q`` for ``O``.
    """
    return model.gamma()


def _generators(model: LieTorusModel) -> List[Tuple[Degree, Degree, MatElement]]:
    info = model.root_system()
    generators = []
    for root in info.simple_roots:
        for alpha in (root, tuple(-x for x in root)):
            for lam in model.coset_reps():
                for x in model.component_basis(alpha, lam):
                    generators.append((alpha, lam, x))
    return generators


def centroid_dimension(model: LieTorusModel, gamma: Sequence[int]) -> int:
    """
    Dimension of the space of degree-``γ`` maps ``c`` on the simple root
    vectors satisfying ``[c x, y] = [x, c y]`` for every pair of them.

    The simple root spaces at the coset representatives generate ``L`` over
    the centroid, and every such pair with ``α + β`` a root or zero has a
    nonzero bracket, so a solution is determined by its value on any one
    generator and extends to a centroid element exactly when one exists.
    """
    gamma = model.check_degree(gamma)
    generators = _generators(model)
    roots = model.root_system().roots

    targets = []
    unknowns = {}  # type: Dict[Tuple[int, int], int]
    for n, (alpha, lam, _) in enumerate(generators):
        shifted = tuple(a + b for a, b in zip(lam, gamma))
        basis = model.component_basis(alpha, shifted)
        targets.append(basis)
        for t in range(len(basis)):
            unknowns[(n, t)] = len(unknowns)
    if not unknowns:
        return 0

    equations = {}  # type: Dict[Tuple, SparseRow]

    def accumulate(pair: int, column: int, element: MatElement, sign: int):
        for key, coeff in element.flatten().items():
            row = equations.setdefault((pair,) + key, {})
            value = coeff if sign > 0 else -coeff
            row[column] = row[column] + value if column in row else value

    pair = 0
    for n, (alpha, _, x) in enumerate(generators):
        for m, (beta, _, y) in enumerate(generators):
            if m <= n:
                continue
            total = tuple(a + b for a, b in zip(alpha, beta))
            if any(total) and total not in roots:
                continue
            for t, image in enumerate(targets[n]):
                accumulate(pair, unknowns[(n, t)], bracket(image, y), 1)
            for s, image in enumerate(targets[m]):
                accumulate(pair, unknowns[(m, s)], bracket(x, image), -1)
            pair += 1

    return len(unknowns) - rank(equations.values())


def centroid_oracle(model: LieTorusModel, box_radius: int) -> Dict[Degree, int]:
    """
    Solve for the centroid in each degree of the box of sup-norm radius
    ``box_radius``.

    :param model: The model.
    :param box_radius: Radius of the degree box, at least 1.
    :raise: :class:`ValueError` for a radius below 1.
    :return: Map from internal degree to the dimension of the degree-``γ``
        part of the centroid.
    """
    if box_radius < 1:
        raise ValueError('centroid oracle needs a box radius of at least 1, '
                         'got {}'.format(box_radius))

    return {
        gamma: centroid_dimension(model, gamma)
        for gamma in degree_box(model, box_radius)
    }


def oracle_mismatches(model: LieTorusModel,
                      dimensions: Dict[Degree, int]) -> List[Dict]:
    """
    Degrees where the oracle dimensions differ from the indicator of
    ``Γ(L)``.
    """
    support = centroid_support(model)
    mismatches = []
    for gamma, dim in sorted(dimensions.items()):
        expected = 1 if support.contains(gamma) else 0
        if dim != expected:
            _logger.warning('{!r}: centroid oracle gives {} in degree {}, '
                            'expected {}'.format(model, dim, list(gamma),
                                                 expected))
            mismatches.append({
                'degree': list(gamma), 'dim': dim, 'expected': expected,
            })
    return mismatches


# -----------------------------------------------------------------------------
# Ranks.

def rank_of_rootspace(model: LieTorusModel, alpha: Sequence[int],
                      coset_reps: Optional[List[Degree]] = None) -> int:
    """
    ``rank_C(L_α)``, the sum of ``dim L_α^λ`` over coset representatives of
    ``Γ(L)`` in ``Λ``.

    :param model: The model.
    :param alpha: A root, or the zero vector.
    :param coset_reps: Coset representatives, computed when not given.
    :return: The rank; 0 with a warning when ``α`` is outside the support.
    """
    alpha = tuple(alpha)
    if len(alpha) != model.ambient_dim:
        raise InvariantError('root {} does not have length {}'.format(
            list(alpha), model.ambient_dim))

    if any(alpha) and alpha not in model.root_system().roots:
        _logger.warning('{!r}: {} is not a root, rank is 0'.format(
            model, list(alpha)))
        return 0

    if coset_reps is None:
        coset_reps = model.coset_reps()
    return sum(len(model.component_basis(alpha, lam)) for lam in coset_reps)


def quotient_group(model: LieTorusModel) -> Quotient:
    """
    ``Λ/Γ(L)`` as invariant factors.
    """
    if model.doubled:
        return quotient_invariants(model.gamma(), within=model.lattice())
    return quotient_invariants(model.gamma())


def invariant_tuple(model: LieTorusModel,
                    coset_budget: int = DEFAULT_COSET_BUDGET) -> InvariantTuple:
    """
    Compute the invariants of a model from its construction.

    For each length class the rank of the lexicographically smallest root
    is reported, after checking every root of the class has the same rank.

    :param model: The model.
    :param coset_budget: Largest index ``[Λ : Γ(L)]`` to enumerate.
    :raise: :class:`lietori.exceptions.CosetBudgetExceeded` when the index
        is larger than ``coset_budget``.
    :raise: :class:`lietori.exceptions.InvariantError` when roots of one
        length have different ranks.
    :return: The invariant tuple.
    """
    quotient = quotient_group(model)
    if quotient.order is None or quotient.order > coset_budget:
        raise CosetBudgetExceeded(
            '{!r}: index of the centroid support is {}, budget is {}'.format(
                model, quotient.order, coset_budget))

    info = model.root_system()
    reps = model.coset_reps()

    crk = rank_of_rootspace(model, model.zero_root, reps)
    rkv = []
    for length_class in info.classes_present():
        ranks = {
            root: rank_of_rootspace(model, root, reps)
            for root in info.roots_of_class(length_class)
        }
        values = set(ranks.values())
        if len(values) != 1:
            raise InvariantError(
                '{!r}: {} roots have different ranks {}'.format(
                    model, length_class.value, sorted(values)))
        rkv.append(ranks[min(ranks)])
        crk += sum(ranks.values())

    result = InvariantTuple(
        root_type=info.label,
        nullity=model.nullity,
        crk=crk,
        rkv=tuple(rkv),
        quotient=quotient,
    )
    _logger.debug('{!r}: invariants {}'.format(model, result))
    return result


def rank_l0_from_invariants(invariants: InvariantTuple) -> int:
    """
    ``rank(L_0)`` recovered from type, centroid rank and rank vector alone.
    """
    counts = class_counts(invariants.root_type)
    if len(counts) != len(invariants.rkv):
        raise InvariantError('rank vector {} does not fit type {}'.format(
            list(invariants.rkv), invariants.root_type))
    return invariants.crk - dot(counts, invariants.rkv)


def redundancy_check(invariants: InvariantTuple, rank_l0: int) -> bool:
    return rank_l0_from_invariants(invariants) == rank_l0
