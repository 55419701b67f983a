"""
Associative tori: twisted group algebras of ``Z^n`` over ``Q(ζ_M)`` with a
root-of-unity commutation matrix, optionally carrying an involution built
from the basic involutive tori.

Monomials are normal-ordered as ``t_1^{λ_1} ... t_n^{λ_n}``, which fixes the
cocycle

    t^λ · t^μ = ζ_M^{σ(λ,μ)} t^{λ+μ},   σ(λ,μ) = Σ_{i>j} c_ij λ_i μ_j,

so that ``t_i t_j = q_ij t_j t_i`` with ``q_ij = ζ_M^{c_ij}``.
"""
import enum
import itertools
import math
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .exactnum import Cyclotomic, common_order, root_of_unity
from .exceptions import TorusError
from .zlattice import (
    IntMatrix, Sublattice, congruence_kernel, coset_representatives,
    kernel_mod,
)


Degree = Tuple[int, ...]


class InvolutionTag(enum.Enum):
    """
    The basic associative tori with involution.
    """
    Q_NATURAL = 'Q-natural'
    R1_NATURAL = 'R1-natural'
    Q_STAR = 'Q-star'
    TRIVIAL = 'trivial'


class Factor(NamedTuple):
    """
    One tensor factor of a torus: ``kind`` is ``'quantum'`` or
    ``'laurent'``, ``zeta_order`` the order of its commutation root of unity
    (1 for Laurent factors).
    """
    kind: str
    start: int
    size: int
    zeta_order: int


class TorusSpec:
    """
    An associative torus of rank ``n`` given by ``q_ij = ζ_M^{c_ij}``.

    :param rank: ``n``.
    :param cyclo_order: ``M``.
    :param comm_exponents: The ``n x n`` matrix ``c``.
    :param factors: The tensor factors the torus was assembled from.
    """
    def __init__(
            self,
            rank: int,
            cyclo_order: int,
            comm_exponents: Sequence[Sequence[int]],
            factors: Sequence[Factor] = (),
    ) -> None:
        self.rank = rank
        self.cyclo_order = cyclo_order
        self.comm_exponents = tuple(tuple(row) for row in comm_exponents)
        self.factors = tuple(factors)

        if cyclo_order < 1:
            raise TorusError('cyclotomic order must be positive')
        if len(self.comm_exponents) != rank or \
                any(len(row) != rank for row in self.comm_exponents):
            raise TorusError('commutation matrix must be {0}x{0}'.format(rank))
        for i in range(rank):
            for j in range(rank):
                if (self.comm_exponents[i][j] + self.comm_exponents[j][i]) \
                        % cyclo_order:
                    raise TorusError(
                        'commutation matrix is not antisymmetric mod {} at '
                        '({}, {})'.format(cyclo_order, i, j)
                    )

        self._center = None

    def __repr__(self):
        return (
            '{}('
            'rank={}, '
            'cyclo_order={}, '
            'comm_exponents={})'.format(
                type(self).__name__,
                self.rank,
                self.cyclo_order,
                [list(row) for row in self.comm_exponents],
            )
        )

    def __eq__(self, other):
        if not isinstance(other, TorusSpec):
            return NotImplemented
        return (self.rank, self.cyclo_order, self.comm_exponents) == \
            (other.rank, other.cyclo_order, other.comm_exponents)

    def __hash__(self):
        return hash((self.rank, self.cyclo_order, self.comm_exponents))

    def cocycle(self, left: Sequence[int], right: Sequence[int]) -> int:
        """
        ``σ(λ,μ) = Σ_{i>j} c_ij λ_i μ_j``.
        """
        c = self.comm_exponents
        total = 0
        for i in range(1, self.rank):
            if left[i]:
                row = c[i]
                total += left[i] * sum(row[j] * right[j] for j in range(i))
        return total

    def twist(self, left: Sequence[int], right: Sequence[int]) -> Cyclotomic:
        return root_of_unity(
            self.cyclo_order, self.cocycle(left, right) % self.cyclo_order
        )

    def is_central(self, degree: Sequence[int]) -> bool:
        c = self.comm_exponents
        return all(
            sum(c[k][j] * degree[j] for j in range(self.rank))
            % self.cyclo_order == 0
            for k in range(self.rank)
        )

    def center_support(self) -> Sublattice:
        if self._center is None:
            self._center = center_support(self)
        return self._center

    def quantum_orders(self) -> List[int]:
        return [f.zeta_order for f in self.factors if f.kind == 'quantum']

    def to_json(self) -> Dict:
        return {
            'rank': self.rank,
            'cyclo_order': self.cyclo_order,
            'comm_exponents': [list(row) for row in self.comm_exponents],
            'factors': [list(f) for f in self.factors],
        }

    @classmethod
    def from_json(cls, data: Dict) -> 'TorusSpec':
        try:
            return cls(
                data['rank'],
                data['cyclo_order'],
                data['comm_exponents'],
                [Factor(*f) for f in data.get('factors', [])],
            )
        except (KeyError, TypeError) as e:
            raise TorusError('invalid torus JSON: {}'.format(e))


class InvolutionSpec:
    """
    Involution data: ``bar(t_i) = s_i t_i``, extended anti-multiplicatively.

    :param generator_signs: The signs ``s_i``.
    :param factor_tags: ``(tag, size)`` pairs describing the basic factors.
    """
    def __init__(
            self,
            generator_signs: Sequence[int],
            factor_tags: Sequence[Tuple[InvolutionTag, int]],
    ) -> None:
        self.generator_signs = tuple(generator_signs)
        self.factor_tags = tuple(
            (InvolutionTag(tag), size) for tag, size in factor_tags
        )

        if any(s not in (1, -1) for s in self.generator_signs):
            raise TorusError('involution signs must be +1 or -1, got {}'.format(
                list(self.generator_signs)))
        if sum(size for _, size in self.factor_tags) != \
                len(self.generator_signs):
            raise TorusError('involution factor ranks do not add up to {}'.format(
                len(self.generator_signs)))

    def __repr__(self):
        return '{}(generator_signs={}, factor_tags={})'.format(
            type(self).__name__,
            list(self.generator_signs),
            [(tag.value, size) for tag, size in self.factor_tags],
        )

    def __eq__(self, other):
        if not isinstance(other, InvolutionSpec):
            return NotImplemented
        return (self.generator_signs, self.factor_tags) == \
            (other.generator_signs, other.factor_tags)

    def __hash__(self):
        return hash((self.generator_signs, self.factor_tags))

    @property
    def second_kind(self) -> bool:
        return any(tag is InvolutionTag.R1_NATURAL
                   for tag, _ in self.factor_tags)

    def to_json(self) -> Dict:
        return {
            'signs': list(self.generator_signs),
            'tags': [[tag.value, size] for tag, size in self.factor_tags],
        }

    @classmethod
    def from_json(cls, data: Dict) -> 'InvolutionSpec':
        try:
            return cls(data['signs'], [tuple(t) for t in data['tags']])
        except (KeyError, TypeError, ValueError) as e:
            raise TorusError('invalid involution JSON: {}'.format(e))


Torus = Tuple[TorusSpec, Optional[InvolutionSpec]]


def validate_involution(spec: TorusSpec, inv: InvolutionSpec) -> None:
    """
    Check that the sign data extends to a period-2 anti-automorphism of the
    torus: ``bar(t_i t_j) = bar(t_j) bar(t_i)`` forces ``q_ij^2 = 1``.
    """
    if len(inv.generator_signs) != spec.rank:
        raise TorusError('involution has {} signs for a rank {} torus'.format(
            len(inv.generator_signs), spec.rank))

    for i in range(spec.rank):
        for j in range(spec.rank):
            if (2 * spec.comm_exponents[i][j]) % spec.cyclo_order:
                raise TorusError(
                    'generators {} and {} do not commute up to sign; no '
                    'involution fixes them up to sign'.format(i, j)
                )


def involution_factor(
        spec: TorusSpec, inv: InvolutionSpec, degree: Sequence[int]
) -> int:
    """
    The sign ``ε(λ)`` with ``bar(t^λ) = ε(λ) t^λ``.

    Reversing the ordered monomial contributes ``ζ^{σ(λ,λ)}``, which is a
    sign because every ``q_ij`` is.
    """
    sign = 1
    for s, exponent in zip(inv.generator_signs, degree):
        if s < 0 and exponent % 2:
            sign = -sign

    reversal = spec.cocycle(degree, degree) % spec.cyclo_order
    if reversal == 0:
        return sign
    if 2 * reversal == spec.cyclo_order:
        return -sign

    raise TorusError('involution factor at {} is not a sign'.format(
        list(degree)))


# -----------------------------------------------------------------------------
# Basic tori and tensor products.

def quantum(order: int, exponent: int) -> Torus:
    """
    The quantum torus ``Q(ζ)`` with ``ζ = ζ_M^e``, normalized so that the
    stored order is the exact order of ``ζ``.
    """
    if order < 1:
        raise TorusError('root of unity order must be positive')
    if exponent % order == 0:
        raise TorusError(
            'zeta_{}^{} = 1 gives a commutative torus; use laurent(2)'.format(
                order, exponent)
        )

    g = math.gcd(order, exponent)
    zeta_order = order // g
    e = (exponent // g) % zeta_order
    spec = TorusSpec(
        2, zeta_order, [[0, e], [-e, 0]],
        [Factor('quantum', 0, 2, zeta_order)],
    )
    return spec, None


def laurent(q: int) -> Torus:
    """
    The Laurent polynomial torus ``R_q``.
    """
    if q < 0:
        raise TorusError('Laurent rank must be nonnegative')
    factors = [Factor('laurent', 0, q, 1)] if q else []
    return TorusSpec(q, 1, [[0] * q for _ in range(q)], factors), None


def trivial(q: int) -> Torus:
    """
    ``R_q`` with the identity involution.
    """
    spec, _ = laurent(q)
    tags = [(InvolutionTag.TRIVIAL, q)] if q else []
    return spec, InvolutionSpec([1] * q, tags)


def r1_involution() -> Torus:
    spec = TorusSpec(1, 1, [[0]], [Factor('laurent', 0, 1, 1)])
    return spec, InvolutionSpec([-1], [(InvolutionTag.R1_NATURAL, 1)])


def qminus1_standard() -> Torus:
    spec, _ = quantum(2, 1)
    return spec, InvolutionSpec([-1, -1], [(InvolutionTag.Q_NATURAL, 2)])


def qminus1_reversal() -> Torus:
    spec, _ = quantum(2, 1)
    return spec, InvolutionSpec([1, 1], [(InvolutionTag.Q_STAR, 2)])


_BASIC = {
    'quantum': quantum,
    'laurent': laurent,
    'trivial': trivial,
    'R1_involution': r1_involution,
    'Qminus1_standard': qminus1_standard,
    'Qminus1_reversal': qminus1_reversal,
}


def make_basic(tag: str, *args) -> Torus:
    """
    Build one of the basic tori by name: ``quantum(M, e)``, ``laurent(q)``,
    ``trivial(q)``, ``R1_involution``, ``Qminus1_standard`` or
    ``Qminus1_reversal``.
    """
    try:
        builder = _BASIC[tag]
    except KeyError:
        raise TorusError('unknown basic torus {}'.format(tag))

    torus = builder(*args)
    if torus[1] is not None:
        validate_involution(*torus)
    return torus


def tensor(a: Torus, b: Torus) -> Torus:
    """
    Tensor product of two tori: block-diagonal commutation matrix over the
    common cyclotomic order and concatenated involution data.
    """
    spec_a, inv_a = a
    spec_b, inv_b = b
    order = common_order([spec_a.cyclo_order, spec_b.cyclo_order])
    scale_a = order // spec_a.cyclo_order
    scale_b = order // spec_b.cyclo_order
    n = spec_a.rank + spec_b.rank

    comm = [[0] * n for _ in range(n)]
    for i in range(spec_a.rank):
        for j in range(spec_a.rank):
            comm[i][j] = spec_a.comm_exponents[i][j] * scale_a
    for i in range(spec_b.rank):
        for j in range(spec_b.rank):
            comm[spec_a.rank + i][spec_a.rank + j] = \
                spec_b.comm_exponents[i][j] * scale_b

    factors = list(spec_a.factors) + [
        f._replace(start=f.start + spec_a.rank) for f in spec_b.factors
    ]
    spec = TorusSpec(n, order, comm, factors)

    if inv_a is None and inv_b is None:
        return spec, None
    if inv_a is None and spec_a.rank == 0:
        inv_a = InvolutionSpec([], [])
    if inv_b is None and spec_b.rank == 0:
        inv_b = InvolutionSpec([], [])
    if inv_a is None or inv_b is None:
        raise TorusError('cannot tensor a torus with involution and one without')

    inv = InvolutionSpec(
        inv_a.generator_signs + inv_b.generator_signs,
        inv_a.factor_tags + inv_b.factor_tags,
    )
    validate_involution(spec, inv)
    return spec, inv


def tensor_all(tori: Iterable[Torus]) -> Torus:
    result = laurent(0)
    for torus in tori:
        result = tensor(result, torus)
    return result


def quantum_product(quantum_factors: Sequence[Tuple[int, int]], q: int) -> Torus:
    """
    ``Q(ζ_1) ⊗ ... ⊗ Q(ζ_k) ⊗ R_q``, the coordinates of the special linear family.
    """
    return tensor_all(
        [quantum(order, e) for order, e in quantum_factors] + [laurent(q)]
    )


def involutive_product(k: int, p: int, q: int) -> Torus:
    """
    ``(Q(-1),♮)^{⊗k} ⊗ A_{k+1} ⊗ (R_q, 1)`` with ``A_{k+1}`` trivial,
    ``(R_1,♮)`` or ``(Q(-1),*)`` for ``p = 0, 1, 2``.
    """
    if k < 0 or q < 0 or p not in (0, 1, 2):
        raise TorusError('invalid involutive torus parameters ({}, {}, {})'.format(
            k, p, q))

    tori = [qminus1_standard() for _ in range(k)]
    if p == 1:
        tori.append(r1_involution())
    elif p == 2:
        tori.append(qminus1_reversal())
    tori.append(trivial(q))
    return tensor_all(tori)


# -----------------------------------------------------------------------------
# Elements.

class TorusElement:
    """
    A finitely supported element ``Σ a_λ t^λ`` of a torus.

    :param spec: The torus.
    :param terms: Map from degree to coefficient; zero coefficients are
        dropped.
    """
    __slots__ = ('spec', 'terms')

    def __init__(self, spec: TorusSpec,
                 terms: Optional[Dict[Degree, Cyclotomic]] = None) -> None:
        self.spec = spec
        self.terms = {
            tuple(d): c for d, c in (terms or {}).items() if c
        }  # type: Dict[Degree, Cyclotomic]

    @classmethod
    def monomial(cls, spec: TorusSpec, degree: Sequence[int],
                 coeff: Optional[Cyclotomic] = None) -> 'TorusElement':
        if coeff is None:
            coeff = Cyclotomic.one(spec.cyclo_order)
        return cls(spec, {tuple(degree): coeff})

    @classmethod
    def one(cls, spec: TorusSpec) -> 'TorusElement':
        return cls.monomial(spec, (0,) * spec.rank)

    def __repr__(self):
        return '{}({})'.format(
            type(self).__name__,
            ', '.join('{}: {!r}'.format(list(d), c)
                      for d, c in sorted(self.terms.items())),
        )

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def _check(self, other: 'TorusElement') -> None:
        if self.spec is not other.spec and self.spec != other.spec:
            raise TorusError('torus elements belong to different tori')

    def __add__(self, other: 'TorusElement') -> 'TorusElement':
        self._check(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms[d] + c if d in terms else c
        return TorusElement(self.spec, terms)

    def __neg__(self):
        return TorusElement(self.spec, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: 'TorusElement') -> 'TorusElement':
        return self + (-other)

    def scale(self, factor) -> 'TorusElement':
        return TorusElement(
            self.spec, {d: c * factor for d, c in self.terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, TorusElement):
            return self.scale(other)
        self._check(other)

        spec = self.spec
        terms = {}  # type: Dict[Degree, Cyclotomic]
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                degree = tuple(a + b for a, b in zip(d1, d2))
                value = c1 * c2 * spec.twist(d1, d2)
                terms[degree] = terms[degree] + value if degree in terms \
                    else value
        return TorusElement(spec, terms)

    def degree(self) -> Degree:
        """
        The degree of a nonzero homogeneous element.
        """
        if len(self.terms) != 1:
            raise TorusError('element is not a nonzero homogeneous element')
        return next(iter(self.terms))

    def inverse(self) -> 'TorusElement':
        """
        Inverse of a nonzero monomial: ``(c t^λ)^{-1} = c^{-1} ζ^{σ(λ,λ)}
        t^{-λ}``.
        """
        degree = self.degree()
        coeff = self.terms[degree]
        minus = tuple(-d for d in degree)
        # t^λ t^{-λ} = ζ^{σ(λ,-λ)}
        scale = (coeff * self.spec.twist(degree, minus)).inverse()
        return TorusElement(self.spec, {minus: scale})

    def bar(self, inv: InvolutionSpec) -> 'TorusElement':
        """
        Apply the involution. The involution is linear over the coefficient
        field.
        """
        return TorusElement(self.spec, {
            d: c if involution_factor(self.spec, inv, d) > 0 else -c
            for d, c in self.terms.items()
        })


def mul(x: TorusElement, y: TorusElement) -> TorusElement:
    return x * y


# -----------------------------------------------------------------------------
# Supports and structural facts.

def center_support(spec: TorusSpec) -> Sublattice:
    """
    ``Γ(A)``: the degrees of central monomials.
    """
    if spec.rank == 0:
        return Sublattice.full(0)
    c = IntMatrix.from_rows(spec.comm_exponents, cols=spec.rank)
    return congruence_kernel(c, spec.cyclo_order)


def hermitian_center_support(spec: TorusSpec, inv: InvolutionSpec) -> Sublattice:
    """
    ``Γ(A,-)``: the degrees of central hermitian monomials. ``ε`` is a
    character on ``Γ(A)``, so this is the kernel of a map to ``Z_2``.
    """
    if inv is None:
        raise TorusError('hermitian center support needs an involution')
    if spec.rank == 0:
        return Sublattice.full(0)

    basis = spec.center_support().basis()
    bits = [0 if involution_factor(spec, inv, b) > 0 else 1 for b in basis]
    kernel = kernel_mod(IntMatrix(1, len(bits), bits), 2)

    generators = []
    for y in kernel.generators.columns():
        generators.append(tuple(
            sum(y[i] * basis[i][row] for i in range(len(basis)))
            for row in range(spec.rank)
        ))
    return Sublattice.from_vectors(spec.rank, generators)


def bracket_space_contains(spec: TorusSpec, x: TorusElement) -> bool:
    """
    Whether ``x ∈ [A,A]``: componentwise, ``[A,A]^λ`` is ``A^λ`` off
    ``Γ(A)`` and ``0`` on it.
    """
    return all(not spec.is_central(d) for d in x.terms)


def plus_minus_split(
        spec: TorusSpec, inv: InvolutionSpec, degree: Sequence[int]
) -> Tuple[int, int]:
    """
    ``(dim A_+^λ, dim A_-^λ)``.
    """
    return (1, 0) if involution_factor(spec, inv, degree) > 0 else (0, 1)


def _residues_mod_two(rank: int) -> Iterable[Degree]:
    return itertools.product((0, 1), repeat=rank)


def check_minus_commutators(
        spec: TorusSpec, inv: InvolutionSpec
) -> List[Tuple[Degree, Degree]]:
    """
    Check ``[A_-, A_-] ⊆ A_+ A_+`` on homogeneous elements.

    Every involutive torus has ``q_ij = ±1``, so signs, twists and ``ε``
    only depend on degrees modulo ``2Z^n``; the residues ``{0,1}^n`` cover
    every degree box. A degree ``λ`` lies in the support of ``A_+ A_+`` iff
    ``λ = ν + (λ - ν)`` with both parts hermitian, and ``ν`` may be taken
    among the coset representatives of ``Γ(A,-)``.

    :return: The pairs of degrees ``(λ, μ)`` that violate the inclusion.
    """
    hermitian = hermitian_center_support(spec, inv)
    representatives = [
        r for r in coset_representatives(hermitian)
        if involution_factor(spec, inv, r) > 0
    ]
    minus = [d for d in _residues_mod_two(spec.rank)
             if involution_factor(spec, inv, d) < 0]

    failures = []
    for left in minus:
        for right in minus:
            if (spec.cocycle(left, right) - spec.cocycle(right, left)) \
                    % spec.cyclo_order == 0:
                continue
            total = tuple(a + b for a, b in zip(left, right))
            split = any(
                involution_factor(
                    spec, inv, tuple(t - v for t, v in zip(total, nu))) > 0
                for nu in representatives
            )
            if not split:
                failures.append((left, right))

    return failures


def module_ranks(spec: TorusSpec, inv: Optional[InvolutionSpec]) -> Dict[str, int]:
    """
    Free-module ranks obtained by counting coset representatives:
    ``A`` over ``Z(A)``, and with an involution ``A``, ``A_+`` and ``A_-``
    over ``Z(A,-)``.
    """
    ranks = {
        'A_over_center': len(coset_representatives(spec.center_support())),
    }
    if inv is not None:
        representatives = coset_representatives(
            hermitian_center_support(spec, inv)
        )
        plus = sum(1 for r in representatives
                   if involution_factor(spec, inv, r) > 0)
        ranks['A_over_hermitian_center'] = len(representatives)
        ranks['A_plus_over_hermitian_center'] = plus
        ranks['A_minus_over_hermitian_center'] = len(representatives) - plus
    return ranks


def torus_to_json(torus: Torus) -> Dict:
    spec, inv = torus
    data = spec.to_json()
    data['involution'] = inv.to_json() if inv is not None else None
    return data


def torus_from_json(data: Dict) -> Torus:
    spec = TorusSpec.from_json(data)
    inv = data.get('involution')
    involution = InvolutionSpec.from_json(inv) if inv is not None else None
    if involution is not None:
        validate_involution(spec, involution)
    return spec, involution
