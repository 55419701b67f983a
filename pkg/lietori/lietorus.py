"""
The classical Lie tori as graded matrix algebras over associative tori:
special linear (``SL``), special unitary (``SU``), special symplectic
(``SP``) and orthogonal (``O``), plus the ``gl`` negative control.

Matrix indices are 0-based. The split toral subalgebra is spanned by
``e_kk - e_{k+1,k+1}`` for ``SL`` and by ``e_kk - e_{k*,k*}`` with
``k* = 2r-1-k`` otherwise, and roots are written in ε-coordinates.

``SU`` degrees live in ``½Λ``; they are stored doubled, so entry ``(i, j)``
carrying ``t^μ`` has internal degree ``2μ + τ_i - τ_j``.
"""
import itertools
import logging
import threading
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .exactnum import Cyclotomic, SparseRow, nullspace
from .exceptions import (
    ConstructionError, DegreeNotInLatticeError, DeltaCollisionError,
    NonHermitianDeltaError, RankExclusionError, TooFewExtraIndicesError,
)
from .rootsys import RootSet, RootSystemInfo, classify
from .torus import (
    Degree, Torus, TorusElement, TorusSpec, hermitian_center_support,
    involution_factor, involutive_product, quantum_product, torus_to_json,
    trivial,
)
from .zlattice import Sublattice, coset_representatives


FAMILIES = ('SL', 'SU', 'SP', 'O')

# (k, p) pairs that the special symplectic family excludes for r = 1, 2.
SP_EXCLUDED = ((0, 0), (0, 1), (1, 0))

Position = Tuple[int, int]


class ConstructionParams(NamedTuple):
    """
    Parameters of a classical Lie torus.

    ``quantum`` lists the ``(M, e)`` quantum factors of an ``SL`` torus;
    ``k``, ``p`` describe the involutive torus of ``SU`` and ``SP``;
    ``m`` and ``delta`` the diagonal ``D`` of ``SU``; ``q`` the Laurent rank.
    """
    family: str
    r: int
    q: int = 0
    k: int = 0
    p: int = 0
    m: int = 0
    quantum: Tuple[Tuple[int, int], ...] = ()
    delta: Tuple[Degree, ...] = ()

    def to_json(self) -> Dict:
        return {
            'family': self.family,
            'r': self.r,
            'q': self.q,
            'k': self.k,
            'p': self.p,
            'm': self.m,
            'quantum': [list(f) for f in self.quantum],
            'delta': [list(d) for d in self.delta],
        }

    @classmethod
    def from_json(cls, data: Dict) -> 'ConstructionParams':
        try:
            return cls(
                family=str(data['family']).upper(),
                r=int(data['r']),
                q=int(data.get('q', 0)),
                k=int(data.get('k', 0)),
                p=int(data.get('p', 0)),
                m=int(data.get('m', 0)),
                quantum=tuple(
                    (int(order), int(e)) for order, e in data.get('quantum', [])
                ),
                delta=tuple(
                    tuple(int(x) for x in d) for d in data.get('delta', [])
                ),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ConstructionError('invalid construction parameters: {}'.format(e))

    def describe(self) -> str:
        if self.family == 'SL':
            return 'SL r={} quantum={} q={}'.format(
                self.r, [list(f) for f in self.quantum], self.q)
        if self.family == 'O':
            return 'O r={} q={}'.format(self.r, self.q)
        if self.family == 'SU':
            return 'SU r={} k={} p={} q={} m={} delta={}'.format(
                self.r, self.k, self.p, self.q, self.m,
                [list(d) for d in self.delta])
        return '{} r={} k={} p={} q={}'.format(
            self.family, self.r, self.k, self.p, self.q)


# -----------------------------------------------------------------------------
# Matrices over a torus.

class MatElement:
    """
    A square matrix with entries in an associative torus, stored sparsely.

    :param spec: The coordinate torus.
    :param size: Matrix size.
    :param entries: Map from ``(i, j)`` to the entry; zero entries are
        dropped.
    """
    __slots__ = ('spec', 'size', 'entries')

    def __init__(self, spec: TorusSpec, size: int,
                 entries: Optional[Dict[Position, TorusElement]] = None) -> None:
        self.spec = spec
        self.size = size
        self.entries = {
            pos: value for pos, value in (entries or {}).items() if value
        }  # type: Dict[Position, TorusElement]

    @classmethod
    def zero(cls, spec: TorusSpec, size: int) -> 'MatElement':
        return cls(spec, size)

    @classmethod
    def unit(cls, spec: TorusSpec, size: int, i: int, j: int,
             degree: Optional[Sequence[int]] = None,
             coeff: Optional[Cyclotomic] = None) -> 'MatElement':
        """
        ``c t^μ e_ij``.
        """
        if degree is None:
            degree = (0,) * spec.rank
        return cls(spec, size, {
            (i, j): TorusElement.monomial(spec, degree, coeff)
        })

    def __repr__(self):
        return '{}(size={}, entries={{{}}})'.format(
            type(self).__name__,
            self.size,
            ', '.join('{}: {!r}'.format(pos, value)
                      for pos, value in sorted(self.entries.items())),
        )

    def __getitem__(self, pos: Position) -> TorusElement:
        value = self.entries.get(pos)
        return value if value is not None else TorusElement(self.spec)

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        if not isinstance(other, MatElement):
            return NotImplemented
        return self.size == other.size and self.entries == other.entries

    def __add__(self, other: 'MatElement') -> 'MatElement':
        entries = dict(self.entries)
        for pos, value in other.entries.items():
            entries[pos] = entries[pos] + value if pos in entries else value
        return MatElement(self.spec, self.size, entries)

    def __neg__(self):
        return MatElement(self.spec, self.size,
                          {pos: -value for pos, value in self.entries.items()})

    def __sub__(self, other: 'MatElement') -> 'MatElement':
        return self + (-other)

    def scale(self, factor) -> 'MatElement':
        return MatElement(self.spec, self.size, {
            pos: value.scale(factor) for pos, value in self.entries.items()
        })

    def __mul__(self, other):
        if not isinstance(other, MatElement):
            return self.scale(other)

        by_row = {}  # type: Dict[int, List[Tuple[int, TorusElement]]]
        for (k, j), value in other.entries.items():
            by_row.setdefault(k, []).append((j, value))

        entries = {}  # type: Dict[Position, TorusElement]
        for (i, k), left in self.entries.items():
            for j, right in by_row.get(k, ()):
                product = left * right
                if product:
                    pos = (i, j)
                    entries[pos] = entries[pos] + product if pos in entries \
                        else product
        return MatElement(self.spec, self.size, entries)

    def trace(self) -> TorusElement:
        total = TorusElement(self.spec)
        for (i, j), value in self.entries.items():
            if i == j:
                total = total + value
        return total

    def flatten(self) -> Dict[Tuple[int, int, Degree], Cyclotomic]:
        """
        The coefficients of the matrix as a map from ``(i, j, μ)``.
        """
        return {
            (i, j, degree): coeff
            for (i, j), value in self.entries.items()
            for degree, coeff in value.terms.items()
        }


def bracket(x: MatElement, y: MatElement) -> MatElement:
    return x * y - y * x


# -----------------------------------------------------------------------------
# Models.

class LieTorusModel:
    """
    A classical Lie torus, given by its matrix realization.

    Components ``L_α^λ`` are computed on demand by solving the membership
    conditions over the monomial matrices of degree ``(α, λ)``, and
    memoized. The memo is shared between threads: reads take no lock,
    writes take ``self._lock``.

    :param params: The construction parameters.
    :param torus: The coordinate torus and its involution, if any.
    :param weights: ε-coordinate weight of each matrix index.
    :param shifts: Doubled degree shift ``τ_i`` of each matrix index, or
        ``None`` when degrees are not doubled.
    :param mirror: ``(π(i), g_i)`` for each index, describing the monomial
        structure matrix ``G`` with ``G[i][π(i)] = g_i``, or ``None`` when no
        skewness condition applies.
    :param trace_condition: Whether the trace must lie in ``[A,A]``.
    :param toral_rank: Number of split toral basis elements.
    """
    def __init__(
            self,
            params: ConstructionParams,
            torus: Torus,
            weights: Sequence[Sequence[int]],
            shifts: Optional[Sequence[Sequence[int]]],
            mirror: Optional[Sequence[Tuple[int, TorusElement]]],
            trace_condition: bool,
            toral_rank: int,
    ) -> None:
        self._logger = logging.getLogger(__name__)

        self.params = params
        self.spec, self.inv = torus
        self.size = len(weights)
        self.weights = [tuple(w) for w in weights]
        self.shifts = [tuple(t) for t in shifts] if shifts is not None else None
        self.mirror = list(mirror) if mirror is not None else None
        self.trace_condition = trace_condition
        self.toral_rank = toral_rank
        self.ambient_dim = len(self.weights[0])
        self.nullity = self.spec.rank

        self._mirror_inverses = (
            [g.inverse() for _, g in self.mirror]
            if self.mirror is not None else None
        )
        self._positions = {}  # type: Dict[Degree, List[Position]]
        for i, j in itertools.product(range(self.size), repeat=2):
            self._positions.setdefault(self.root_of(i, j), []).append((i, j))

        self._components = {}  # type: Dict[Tuple[Degree, Degree], List[MatElement]]
        self._lock = threading.Lock()
        self._lattice = None  # type: Optional[Sublattice]
        self._gamma = None  # type: Optional[Sublattice]
        self._root_system = None  # type: Optional[RootSystemInfo]

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, self.params.describe())

    @property
    def family(self) -> str:
        return self.params.family

    @property
    def doubled(self) -> bool:
        return self.shifts is not None

    @property
    def zero_root(self) -> Degree:
        return (0,) * self.ambient_dim

    def root_of(self, i: int, j: int) -> Degree:
        return tuple(a - b for a, b in zip(self.weights[i], self.weights[j]))

    def candidate_roots(self) -> List[Degree]:
        """
        Every ``ad(h)``-eigenvalue of a matrix unit, the zero root included.
        """
        return sorted(self._positions)

    # -------------------------------------------------------------------------
    # Gradings.

    def entry_degree(self, i: int, j: int, mu: Sequence[int]) -> Degree:
        """
        The internal degree of ``t^μ e_ij``.
        """
        if self.shifts is None:
            return tuple(mu)
        return tuple(2 * m + a - b for m, a, b in
                     zip(mu, self.shifts[i], self.shifts[j]))

    def _torus_degree(self, i: int, j: int, lam: Sequence[int]) -> Optional[Degree]:
        if self.shifts is None:
            return tuple(lam)
        doubled = [x - a + b for x, a, b in
                   zip(lam, self.shifts[i], self.shifts[j])]
        if any(x % 2 for x in doubled):
            return None
        return tuple(x // 2 for x in doubled)

    def lattice(self) -> Sublattice:
        """
        The external grading group ``Λ`` in internal coordinates: ``Z^n``,
        or for ``SU`` the lattice generated by ``2e_i`` and the ``δ_a``.
        """
        if self._lattice is None:
            n = self.nullity
            if self.shifts is None:
                self._lattice = Sublattice.full(n)
            else:
                generators = [tuple(2 if i == j else 0 for j in range(n))
                              for i in range(n)]
                generators.extend(self.shifts)
                self._lattice = Sublattice.from_vectors(n, generators)
        return self._lattice

    def gamma(self) -> Sublattice:
        """
        ``Γ(L)``, the support of the centroid, in internal coordinates.
        """
        if self._gamma is None:
            if self.family == 'O':
                self._gamma = Sublattice.full(self.nullity)
            elif self.family in ('SL', 'GL'):
                self._gamma = self.spec.center_support()
            else:
                hermitian = hermitian_center_support(self.spec, self.inv)
                self._gamma = hermitian.scaled(2) if self.doubled else hermitian
        return self._gamma

    def coset_reps(self) -> List[Degree]:
        """
        Representatives of ``Λ/Γ(L)``, zero first.
        """
        if self.doubled:
            return coset_representatives(self.gamma(), within=self.lattice())
        return coset_representatives(self.gamma())

    def check_degree(self, lam: Sequence[int]) -> Degree:
        lam = tuple(lam)
        if len(lam) != self.nullity or not self.lattice().contains(lam):
            raise DegreeNotInLatticeError(
                'degree {} is not in the grading group of {!r}'.format(
                    list(lam), self))
        return lam

    # -------------------------------------------------------------------------
    # Structure.

    def adjoint(self, x: MatElement) -> MatElement:
        """
        ``G^{-1} x̄^t G``. Entry ``(k, j)`` with value ``a`` lands at
        ``(π(j), π(k))`` with value ``g_j^{-1} bar(a) g_k``.
        """
        if self.mirror is None:
            raise ConstructionError('{!r} has no structure matrix'.format(self))

        entries = {}
        for (k, j), value in x.entries.items():
            image = value.bar(self.inv) if self.inv is not None else value
            image = self._mirror_inverses[j] * image * self.mirror[k][1]
            entries[(self.mirror[j][0], self.mirror[k][0])] = image
        return MatElement(self.spec, self.size, entries)

    def is_member(self, x: MatElement) -> bool:
        """
        Whether ``x`` satisfies the skewness and trace conditions.
        """
        if self.mirror is not None and (x + self.adjoint(x)):
            return False
        if self.trace_condition:
            return all(not self.spec.is_central(d) for d in x.trace().terms)
        return True

    def toral_basis(self) -> List[MatElement]:
        one = Cyclotomic.one(self.spec.cyclo_order)
        basis = []
        for k in range(self.toral_rank):
            other = k + 1 if self.mirror is None else self.mirror[k][0]
            basis.append(MatElement(self.spec, self.size, {
                (k, k): TorusElement.monomial(self.spec, (0,) * self.nullity, one),
                (other, other): TorusElement.monomial(
                    self.spec, (0,) * self.nullity, -one),
            }))
        return basis

    def eigenvalue(self, k: int, alpha: Sequence[int]) -> int:
        """
        The eigenvalue of ``ad`` of the ``k``-th toral basis element on
        ``L_α``.
        """
        if self.mirror is None:
            return alpha[k] - alpha[k + 1]
        return alpha[k]

    def bracket(self, x: MatElement, y: MatElement) -> MatElement:
        return bracket(x, y)

    # -------------------------------------------------------------------------
    # Components.

    def component_basis(self, alpha: Sequence[int], lam: Sequence[int]) -> List[MatElement]:
        """
        A basis of ``L_α^λ``.

        :param alpha: Root in ε-coordinates (the zero vector for ``L_0``).
        :param lam: Internal degree; doubled for ``SU``.
        :raise: :class:`lietori.exceptions.DegreeNotInLatticeError` when
            ``λ`` is not in the grading group.
        """
        key = (tuple(alpha), tuple(lam))
        cached = self._components.get(key)
        if cached is not None:
            return cached

        lam = self.check_degree(lam)
        basis = self._solve_component(key[0], lam)

        with self._lock:
            self._components.setdefault(key, basis)

        self._logger.debug('{!r}: dim L_{}^{} = {}'.format(
            self, list(key[0]), list(lam), len(basis)))
        return basis

    def component_dim(self, alpha: Sequence[int], lam: Sequence[int]) -> int:
        """
        ``dim L_α^λ``, computed at the coset representative of ``λ``
        (multiplication by the centroid identifies the components of a
        ``Γ(L)``-coset).
        """
        lam = self.check_degree(lam)
        return len(self.component_basis(alpha, self.gamma().reduce(lam)))

    def _solve_component(self, alpha: Degree, lam: Degree) -> List[MatElement]:
        unknowns = []  # type: List[Tuple[int, int, Degree]]
        for i, j in self._positions.get(alpha, ()):
            mu = self._torus_degree(i, j, lam)
            if mu is not None:
                unknowns.append((i, j, mu))
        if not unknowns:
            return []

        order = self.spec.cyclo_order
        one = Cyclotomic.one(order)
        index = {(i, j): n for n, (i, j, _) in enumerate(unknowns)}
        rows = []  # type: List[SparseRow]

        if self.mirror is not None:
            for n, (a, b, _) in enumerate(unknowns):
                k, j = self.mirror[b][0], self.mirror[a][0]
                source = index.get((k, j))
                if source is None:
                    raise ConstructionError(
                        'mirror of ({}, {}) is missing from L_{}^{}'.format(
                            a, b, list(alpha), list(lam)))
                unit = MatElement.unit(self.spec, self.size, k, j,
                                       unknowns[source][2])
                image = self.adjoint(unit)[(a, b)]
                coeff = image.terms[unknowns[n][2]]
                row = {n: one}
                row[source] = row[source] + coeff if source in row else coeff
                rows.append(row)

        if self.trace_condition:
            diagonal = [(n, mu) for n, (i, j, mu) in enumerate(unknowns) if i == j]
            by_degree = {}  # type: Dict[Degree, List[int]]
            for n, mu in diagonal:
                by_degree.setdefault(mu, []).append(n)
            for mu, columns in by_degree.items():
                if self.spec.is_central(mu):
                    rows.append({n: one for n in columns})

        basis = []
        for vector in nullspace(rows, len(unknowns), order):
            entries = {}
            for (i, j, mu), coeff in zip(unknowns, vector):
                if coeff:
                    entries[(i, j)] = TorusElement.monomial(self.spec, mu, coeff)
            basis.append(MatElement(self.spec, self.size, entries))
        return basis

    def root_support(self) -> RootSet:
        """
        The nonzero roots with a nonzero component. Components are periodic
        modulo ``Γ(L)``, so the coset representatives cover every degree.
        """
        reps = self.coset_reps()
        roots = [
            alpha for alpha in self.candidate_roots()
            if any(alpha) and any(self.component_basis(alpha, lam) for lam in reps)
        ]
        return RootSet(self.ambient_dim, roots)

    def root_system(self) -> RootSystemInfo:
        if self._root_system is None:
            self._root_system = classify(self.root_support())
        return self._root_system

    def to_json(self) -> Dict:
        return {
            'params': self.params.to_json(),
            'torus': torus_to_json((self.spec, self.inv)),
            'metadata': {
                'matrix_size': self.size,
                'nullity': self.nullity,
                'doubled_degrees': self.doubled,
                'lattice': [list(v) for v in self.lattice().basis()],
                'centroid_support': [list(v) for v in self.gamma().basis()],
            },
        }


def degree_box(model: LieTorusModel, radius: int) -> List[Degree]:
    """
    Internal degrees in ``Λ`` of sup-norm at most ``radius`` (``2·radius``
    in the doubled ``SU`` coordinates), zero first.
    """
    bound = 2 * radius if model.doubled else radius
    lattice = model.lattice()
    box = [
        d for d in itertools.product(range(-bound, bound + 1), repeat=model.nullity)
        if lattice.contains(d)
    ]
    box.sort(key=lambda d: (max((abs(x) for x in d), default=0), d))
    return box


# -----------------------------------------------------------------------------
# Constructions.

def _unit_vector(dim: int, i: int, sign: int = 1) -> Degree:
    return tuple(sign if j == i else 0 for j in range(dim))


def _symmetric_weights(r: int, extra: int) -> List[Degree]:
    weights = [_unit_vector(r, i) for i in range(r)]
    weights.extend(_unit_vector(r, r - 1 - i, -1) for i in range(r))
    weights.extend((0,) * r for _ in range(extra))
    return weights


def _scalar(spec: TorusSpec, value: int) -> TorusElement:
    return TorusElement.monomial(
        spec, (0,) * spec.rank, Cyclotomic.from_scalar(spec.cyclo_order, value)
    )


def _check_common(params: ConstructionParams) -> None:
    if params.family not in FAMILIES:
        raise ConstructionError('unknown family {!r}; expected one of {}'.format(
            params.family, ', '.join(FAMILIES)))
    if params.r < 1:
        raise ConstructionError('r must be at least 1, got {}'.format(params.r))
    if params.q < 0 or params.k < 0:
        raise ConstructionError('k and q must be nonnegative')
    if params.family in ('SU', 'SP') and params.p not in (0, 1, 2):
        raise ConstructionError('p must be 0, 1 or 2, got {}'.format(params.p))
    if params.family != 'SU' and (params.m or params.delta):
        raise ConstructionError('m and delta only apply to SU')
    if params.family != 'SL' and params.quantum:
        raise ConstructionError('quantum factors only apply to SL')


def _check_delta(params: ConstructionParams, torus: Torus) -> None:
    spec, inv = torus
    if params.m < 1:
        raise ConstructionError('SU needs m >= 1')
    if (params.r, params.k, params.p) == (1, 0, 0) and params.m < 5:
        raise TooFewExtraIndicesError(
            'SU with r=1 and trivial involution needs m >= 5, got m={}'.format(
                params.m))
    if len(params.delta) != params.m:
        raise ConstructionError('expected {} delta degrees, got {}'.format(
            params.m, len(params.delta)))

    for d in params.delta:
        if len(d) != spec.rank:
            raise ConstructionError('delta {} does not have length {}'.format(
                list(d), spec.rank))
    if any(params.delta[0]):
        raise ConstructionError('delta_1 must be 0, got {}'.format(
            list(params.delta[0])))

    for d in params.delta:
        if involution_factor(spec, inv, d) < 0:
            raise NonHermitianDeltaError(
                'delta {} is not the degree of a hermitian element'.format(list(d)))

    residues = {}
    for a, d in enumerate(params.delta):
        residue = tuple(x % 2 for x in d)
        if residue in residues:
            raise DeltaCollisionError(
                'delta_{} and delta_{} agree modulo 2L: {} and {}'.format(
                    residues[residue] + 1, a + 1,
                    list(params.delta[residues[residue]]), list(d)))
        residues[residue] = a


def construct(params: ConstructionParams) -> LieTorusModel:
    """
    Build a classical Lie torus.

    :param params: The construction parameters.
    :raise: :class:`lietori.exceptions.ConstructionError` (or one of its
        subclasses) for inadmissible parameters.
    :return: The model.
    """
    _check_common(params)
    r = params.r

    if params.family == 'SL':
        torus = quantum_product(params.quantum, params.q)
        weights = [_unit_vector(r + 1, i) for i in range(r + 1)]
        return LieTorusModel(params, torus, weights, None, None, True, r)

    if params.family == 'O':
        if r < 4:
            raise RankExclusionError(
                'orthogonal Lie tori need r >= 4, got r={}'.format(r))
        torus = trivial(params.q)
        mirror = [(2 * r - 1 - i, _scalar(torus[0], 1)) for i in range(2 * r)]
        return LieTorusModel(params, torus, _symmetric_weights(r, 0), None,
                             mirror, True, r)

    torus = involutive_product(params.k, params.p, params.q)
    spec = torus[0]

    if params.family == 'SP':
        if r in (1, 2) and (params.k, params.p) in SP_EXCLUDED:
            raise RankExclusionError(
                'SP with r={} excludes (k, p) = ({}, {})'.format(
                    r, params.k, params.p))
        mirror = [(2 * r - 1 - i, _scalar(spec, 1 if i < r else -1))
                  for i in range(2 * r)]
        return LieTorusModel(params, torus, _symmetric_weights(r, 0), None,
                             mirror, True, r)

    _check_delta(params, torus)
    mirror = [(2 * r - 1 - i, _scalar(spec, 1)) for i in range(2 * r)]
    mirror.extend((2 * r + a, TorusElement.monomial(spec, d))
                  for a, d in enumerate(params.delta))
    shifts = [(0,) * spec.rank] * (2 * r) + [tuple(d) for d in params.delta]
    return LieTorusModel(params, torus, _symmetric_weights(r, params.m), shifts,
                         mirror, True, r)


def gl_control(r: int, quantum: Iterable[Tuple[int, int]] = (), q: int = 0) -> LieTorusModel:
    """
    ``gl_{r+1}(A)``: like ``SL`` but without the trace condition, so the
    identity matrices ``t^γ I`` with ``γ ∈ Γ(A)`` are central.
    """
    params = ConstructionParams('GL', r, q=q, quantum=tuple(quantum))
    torus = quantum_product(params.quantum, q)
    weights = [_unit_vector(r + 1, i) for i in range(r + 1)]
    return LieTorusModel(params, torus, weights, None, None, False, r)
