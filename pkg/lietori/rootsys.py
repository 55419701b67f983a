"""
Recognition of irreducible finite root systems, reduced or of type BC, from
integer vectors in ε-coordinates with the standard dot product.
"""
import enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Sequence, Tuple

import numpy as np
import sympy

from .exceptions import RootSystemError


Root = Tuple[int, ...]

# Number of roots of each irreducible type, by family.
_ROOT_COUNTS = {
    'A': lambda l: l * (l + 1),
    'B': lambda l: 2 * l * l,
    'C': lambda l: 2 * l * l,
    'D': lambda l: 2 * l * (l - 1),
    'E': lambda l: {6: 72, 7: 126, 8: 240}[l],
    'F': lambda l: 48,
    'G': lambda l: 12,
    'BC': lambda l: 2 * l * l + 2 * l,
}


class LengthClass(enum.Enum):
    SHORT = 'short'
    LONG = 'long'
    EXTRA = 'extra'


class RootTypeLabel(NamedTuple):
    """
    A root system type such as ``C3`` or ``BC1``.
    """
    family: str
    rank: int
    reduced: bool = True

    def __str__(self):
        return '{}{}'.format(self.family, self.rank)

    @classmethod
    def parse(cls, text: str) -> 'RootTypeLabel':
        text = text.strip()
        family = text.rstrip('0123456789')
        try:
            rank = int(text[len(family):])
        except ValueError:
            raise RootSystemError('cannot parse root type {!r}'.format(text))
        if family not in _ROOT_COUNTS:
            raise RootSystemError('unknown root type family {!r}'.format(family))
        return cls(family, rank, family != 'BC')

    @property
    def root_count(self) -> int:
        return _ROOT_COUNTS[self.family](self.rank)


class RootSet:
    """
    A finite set of nonzero integer vectors, closed under negation. The zero
    root is implicit.

    :param ambient_dim: Length of the vectors.
    :param roots: The nonzero roots.
    """
    def __init__(self, ambient_dim: int, roots: Iterable[Sequence[int]]) -> None:
        self.ambient_dim = ambient_dim
        self.roots = frozenset(tuple(r) for r in roots)  # type: FrozenSet[Root]

        for root in self.roots:
            if len(root) != ambient_dim:
                raise RootSystemError('root {} does not have length {}'.format(
                    list(root), ambient_dim))
            if not any(root):
                raise RootSystemError('the zero vector is not a nonzero root')
            if tuple(-x for x in root) not in self.roots:
                raise RootSystemError('root set is not closed under negation: '
                                      '{}'.format(list(root)))

    def __repr__(self):
        return '{}(ambient_dim={}, roots={})'.format(
            type(self).__name__, self.ambient_dim, sorted(self.roots))

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(sorted(self.roots))

    def __contains__(self, root):
        return tuple(root) in self.roots


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def pairing(beta: Sequence[int], alpha: Sequence[int]) -> Fraction:
    """
    ``<β, α^∨> = 2(β,α)/(α,α)``.
    """
    return Fraction(2 * dot(beta, alpha), dot(alpha, alpha))


def is_positive(root: Sequence[int]) -> bool:
    """
    Positivity for the functional ``Σ v_i W^{n-1-i}`` with ``W`` larger than
    twice any coordinate, i.e. the sign of the first nonzero coordinate.
    """
    for x in root:
        if x:
            return x > 0
    return False


def cartan_matrix_for(label: RootTypeLabel) -> np.ndarray:
    """
    Catalog Cartan matrix ``A_ij = 2(α_i,α_j)/(α_i,α_i)`` of a reduced type,
    in the usual Dynkin ordering (for B the last simple root is short, for C
    it is long).
    """
    family, rank = label.family, label.rank
    if family == 'BC':
        family = 'B' if rank > 1 else 'A'

    a = 2 * np.eye(rank, dtype=int)
    if rank > 1:
        a[range(rank - 1), range(1, rank)] = -1
        a[range(1, rank), range(rank - 1)] = -1

    if family == 'B':
        a[-1, -2] = -2
    elif family == 'C':
        a[-2, -1] = -2
    elif family == 'D':
        a[-2, -1] = a[-1, -2] = 0
        a[-3, -1] = a[-1, -3] = -1
    elif family == 'E':
        # Chain 0 - 1 - ... - (rank-2), with the last node on node 2.
        a[-2, -1] = a[-1, -2] = 0
        a[2, -1] = a[-1, 2] = -1
    elif family == 'F':
        a[2, 1] = -2
    elif family == 'G':
        a[1, 0] = -3

    return a


class RootSystemInfo:
    """
    The result of :func:`classify`.
    """
    def __init__(
            self,
            label: RootTypeLabel,
            roots: RootSet,
            simple_roots: List[Root],
            cartan: np.ndarray,
            length_classes: Dict[Root, LengthClass],
    ) -> None:
        self.label = label
        self.roots = roots
        self.simple_roots = simple_roots
        self.cartan = cartan
        self.length_classes = length_classes

    def __repr__(self):
        return '{}(label={}, simple_roots={})'.format(
            type(self).__name__, self.label, self.simple_roots)

    @property
    def positive_roots(self) -> List[Root]:
        return [r for r in self.roots if is_positive(r)]

    def classes_present(self) -> List[LengthClass]:
        present = set(self.length_classes.values())
        return [c for c in LengthClass if c in present]

    def roots_of_class(self, length_class: LengthClass) -> List[Root]:
        return sorted(r for r, c in self.length_classes.items()
                      if c is length_class)

    def indivisible(self) -> List[Root]:
        return sorted(r for r, c in self.length_classes.items()
                      if c is not LengthClass.EXTRA)


def _connected(adjacency: List[List[int]]) -> bool:
    if not adjacency:
        return True
    seen = {0}
    stack = [0]
    while stack:
        node = stack.pop()
        for other in adjacency[node]:
            if other not in seen:
                seen.add(other)
                stack.append(other)
    return len(seen) == len(adjacency)


def _identify(cartan: np.ndarray, norms: List[int]) -> RootTypeLabel:
    rank = cartan.shape[0]
    adjacency = [[j for j in range(rank) if j != i and cartan[i, j]]
                 for i in range(rank)]

    if not _connected(adjacency):
        raise RootSystemError('root system is reducible')
    if rank == 1:
        return RootTypeLabel('A', 1)

    bonds = {(i, j): int(cartan[i, j] * cartan[j, i])
             for i in range(rank) for j in adjacency[i] if i < j}
    if len(bonds) != rank - 1:
        raise RootSystemError('Dynkin diagram contains a cycle')

    multiplicity = max(bonds.values())
    if multiplicity == 3:
        return RootTypeLabel('G', rank)

    if multiplicity == 2:
        (i, j), = [edge for edge, m in bonds.items() if m == 2]
        if rank == 2:
            return RootTypeLabel('B', 2)
        if len(adjacency[i]) == 2 and len(adjacency[j]) == 2:
            return RootTypeLabel('F', rank)
        leaf = i if len(adjacency[i]) == 1 else j
        other = j if leaf == i else i
        return RootTypeLabel('B' if norms[leaf] < norms[other] else 'C', rank)

    branches = [i for i in range(rank) if len(adjacency[i]) == 3]
    if not branches:
        return RootTypeLabel('A', rank)

    centre = branches[0]
    arms = []
    for start in adjacency[centre]:
        length, previous, node = 1, centre, start
        while True:
            onward = [n for n in adjacency[node] if n != previous]
            if not onward:
                break
            previous, node = node, onward[0]
            length += 1
        arms.append(length)

    arms.sort()
    if arms[:2] == [1, 1]:
        return RootTypeLabel('D', rank)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return RootTypeLabel('E', rank)

    raise RootSystemError('unrecognized Dynkin diagram with arms {}'.format(
        arms))


def classify(rs: RootSet) -> RootSystemInfo:
    """
    Classify an irreducible, possibly non-reduced, crystallographic root
    system.

    B1 and C1 are reported as A1 and C2 as B2.

    :param rs: The nonzero roots.
    :raise: :class:`lietori.exceptions.RootSystemError` for empty, reducible
        or non-crystallographic input.
    :return: Type, simple roots, Cartan matrix and length classes.
    """
    if not rs.roots:
        raise RootSystemError('empty root set')

    roots = sorted(rs.roots)
    vectors = np.array(roots, dtype=np.int64)
    gram = vectors @ vectors.T
    norms = np.diag(gram)

    if np.any((2 * gram) % norms[np.newaxis, :]):
        raise RootSystemError('Cartan integers are not integral')
    for i, beta in enumerate(roots):
        for j, alpha in enumerate(roots):
            n = 2 * int(gram[i, j]) // int(norms[j])
            image = tuple(b - n * a for a, b in zip(alpha, beta))
            if image not in rs.roots:
                raise RootSystemError(
                    'not closed under the reflection in {}'.format(list(alpha))
                )

    def half(root):
        if any(x % 2 for x in root):
            return None
        return tuple(x // 2 for x in root)

    extra = {r for r in roots if half(r) in rs.roots}
    indivisible = [r for r in roots if r not in extra]
    indivisible_set = set(indivisible)

    positive = [r for r in indivisible if is_positive(r)]
    positive_set = set(positive)
    simple = []
    for root in positive:
        decomposable = any(
            tuple(x - y for x, y in zip(root, other)) in positive_set
            for other in positive if other != root
        )
        if not decomposable:
            simple.append(root)

    simple_array = np.array(simple, dtype=np.int64)
    simple_gram = simple_array @ simple_array.T
    simple_norms = np.diag(simple_gram)
    cartan = (2 * simple_gram) // simple_norms[:, np.newaxis]

    label = _identify(cartan, [int(n) for n in simple_norms])
    if extra:
        if label.family not in ('A', 'B') or \
                (label.family == 'A' and label.rank > 1):
            raise RootSystemError(
                'non-reduced system over {} is not of type BC'.format(label)
            )
        label = RootTypeLabel('BC', label.rank, reduced=False)

    if len(roots) != label.root_count:
        raise RootSystemError('{} roots do not match type {}'.format(
            len(roots), label))

    catalog = cartan_matrix_for(label)
    if not np.allclose(np.sort(np.linalg.eigvals(catalog).real),
                       np.sort(np.linalg.eigvals(cartan).real)):
        raise RootSystemError('Cartan matrix does not match catalog {}'.format(
            label))

    indivisible_norms = sorted({dot(r, r) for r in indivisible_set})
    length_classes = {}
    for root in roots:
        if root in extra:
            length_classes[root] = LengthClass.EXTRA
        elif dot(root, root) == indivisible_norms[0]:
            length_classes[root] = LengthClass.SHORT
        else:
            length_classes[root] = LengthClass.LONG

    return RootSystemInfo(label, rs, simple, cartan, length_classes)


def root_lattice_coords(
        info: RootSystemInfo
) -> Tuple[List[Root], Dict[Root, Tuple[int, ...]]]:
    """
    A Z-basis of the root lattice (the simple roots) and the integer
    coordinates of every root in it.
    """
    basis = sympy.Matrix(info.simple_roots).T
    coords = {}
    for root in info.roots:
        solution, params = basis.gauss_jordan_solve(sympy.Matrix(root))
        if params.shape[0]:
            raise RootSystemError('simple roots are linearly dependent')
        if any(not x.is_integer for x in solution):
            raise RootSystemError('root {} is not in the simple root lattice'
                                  .format(list(root)))
        coords[root] = tuple(int(x) for x in solution)

    return list(info.simple_roots), coords


def class_counts(label: RootTypeLabel) -> List[int]:
    """
    Number of roots in each length class present in a system of type
    ``label``, in the order short, long, extra.
    """
    family, rank = label.family, label.rank
    if family in ('A', 'D', 'E'):
        return [label.root_count]
    if family == 'B':
        return [2 * rank, 2 * rank * (rank - 1)]
    if family == 'C':
        return [2 * rank * (rank - 1), 2 * rank]
    if family in ('F', 'G'):
        return [label.root_count // 2] * 2
    # BC: short ±ε_i, long ±ε_i±ε_j, extra ±2ε_i.
    if rank == 1:
        return [2, 2]
    return [2 * rank, 2 * rank * (rank - 1), 2 * rank]
