"""
Integer lattice linear algebra for the grading groups: Smith normal form,
congruence kernels, quotient invariant factors and coset enumeration.
"""
import functools
import itertools
import math
from typing import Iterable, List, Optional, Sequence, Tuple

from .exceptions import LatticeError


Vector = Tuple[int, ...]


class IntMatrix:
    """
    A dense integer matrix stored row-major.

    :param rows: Number of rows.
    :param cols: Number of columns.
    :param entries: ``rows * cols`` integers in row-major order.
    """
    __slots__ = ('rows', 'cols', 'entries')

    def __init__(self, rows: int, cols: int, entries: Sequence[int]) -> None:
        if len(entries) != rows * cols:
            raise LatticeError(
                'expected {} entries for a {}x{} matrix, got {}'.format(
                    rows * cols, rows, cols, len(entries))
            )
        self.rows = rows
        self.cols = cols
        self.entries = tuple(int(e) for e in entries)

    def __repr__(self):
        return '{}(rows={}, cols={}, entries={})'.format(
            type(self).__name__, self.rows, self.cols, list(self.entries),
        )

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == \
            (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]],
                  cols: Optional[int] = None) -> 'IntMatrix':
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = [e for row in rows for e in row]
        return cls(len(rows), cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]],
                     rows: int) -> 'IntMatrix':
        for column in columns:
            if len(column) != rows:
                raise LatticeError(
                    'generator {} does not have length {}'.format(
                        list(column), rows)
                )
        entries = [columns[j][i] for i in range(rows)
                   for j in range(len(columns))]
        return cls(rows, len(columns), entries)

    @classmethod
    def identity(cls, size: int) -> 'IntMatrix':
        return cls(size, size, [int(i == j) for i in range(size)
                                for j in range(size)])

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> 'IntMatrix':
        return IntMatrix.from_rows(
            [self.column(j) for j in range(self.cols)], cols=self.rows
        )

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.cols != other.rows:
            raise LatticeError('cannot multiply {}x{} by {}x{}'.format(
                self.rows, self.cols, other.rows, other.cols))
        rows = [
            [sum(self[i, k] * other[k, j] for k in range(self.cols))
             for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(rows, cols=other.cols)

    def apply(self, vector: Sequence[int]) -> Vector:
        return tuple(
            sum(a * b for a, b in zip(self.row(i), vector))
            for i in range(self.rows)
        )

    def diagonal(self) -> List[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]


def _snf(matrix: IntMatrix):
    """
    Smith normal form with the inverse of the row transform tracked too.

    :return: ``(U, U_inverse, S, V)`` as lists of lists.
    """
    m, n = matrix.rows, matrix.cols
    a = matrix.to_rows()
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    u_inv = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for row in u_inv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(target, source, factor):
        # row_target += factor * row_source
        a[target] = [x + factor * y for x, y in zip(a[target], a[source])]
        u[target] = [x + factor * y for x, y in zip(u[target], u[source])]
        for row in u_inv:
            row[source] -= factor * row[target]

    def add_col(target, source, factor):
        # col_target += factor * col_source
        for row in a:
            row[target] += factor * row[source]
        for row in v:
            row[target] += factor * row[source]

    for t in range(min(m, n)):
        candidates = [(abs(a[i][j]), i, j) for i in range(t, m)
                      for j in range(t, n) if a[i][j]]
        if not candidates:
            break
        _, i, j = min(candidates)
        swap_rows(t, i)
        swap_cols(t, j)

        while True:
            pivot = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // pivot))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // pivot))

            leftovers = [(abs(a[i][t]), i, t) for i in range(t + 1, m)
                         if a[i][t]]
            leftovers += [(abs(a[t][j]), t, j) for j in range(t + 1, n)
                          if a[t][j]]
            if leftovers:
                _, i, j = min(leftovers)
                swap_rows(t, i)
                swap_cols(t, j)
                continue

            offender = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                 if a[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            add_row(t, offender[0], 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
            for row in u_inv:
                row[t] = -row[t]

    return u, u_inv, a, v


def smith_normal_form(
        matrix: IntMatrix
) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """
    Compute ``U, S, V`` with ``U · matrix · V = S``, ``U`` and ``V``
    unimodular and ``S`` diagonal with ``d_1 | d_2 | ...``, all ``d_i >= 0``.

    Pivots are chosen with the smallest nonzero absolute value.

    :param matrix: The matrix to reduce.
    :return: ``(U, S, V)``.
    """
    u, _, s, v = _snf(matrix)
    m, n = matrix.rows, matrix.cols
    return (
        IntMatrix.from_rows(u, cols=m),
        IntMatrix.from_rows(s, cols=n),
        IntMatrix.from_rows(v, cols=n),
    )


class Quotient:
    """
    A finitely generated abelian group ``⊕ Z_{d_i} ⊕ Z^free`` with the
    ``d_i > 1`` in divisibility order.
    """
    __slots__ = ('torsion', 'free')

    def __init__(self, torsion: Iterable[int] = (), free: int = 0) -> None:
        self.torsion = tuple(int(d) for d in torsion)
        self.free = int(free)

    def __repr__(self):
        return '{}(torsion={}, free={})'.format(
            type(self).__name__, list(self.torsion), self.free)

    def __str__(self):
        parts = []
        for d, group in itertools.groupby(self.torsion):
            power = len(list(group))
            parts.append('Z{}'.format(d) if power == 1
                         else 'Z{}^{}'.format(d, power))
        if self.free:
            parts.append('Z^{}'.format(self.free))
        return ' + '.join(parts) if parts else '0'

    def __eq__(self, other):
        if not isinstance(other, Quotient):
            return NotImplemented
        return (self.torsion, self.free) == (other.torsion, other.free)

    def __hash__(self):
        return hash((self.torsion, self.free))

    @property
    def order(self) -> Optional[int]:
        if self.free:
            return None
        return functools.reduce(lambda x, y: x * y, self.torsion, 1)

    def to_json(self):
        return {'torsion': list(self.torsion), 'free': self.free}

    @classmethod
    def from_json(cls, data) -> 'Quotient':
        try:
            return cls(data['torsion'], data['free'])
        except (KeyError, TypeError) as e:
            raise LatticeError('invalid quotient JSON {}: {}'.format(data, e))

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> 'Quotient':
        """
        Normalize ``⊕ Z_{o_i}`` into invariant factors.
        """
        orders = list(orders)
        diag = IntMatrix(
            len(orders), len(orders),
            [orders[i] if i == j else 0 for i in range(len(orders))
             for j in range(len(orders))],
        )
        return quotient_invariants(Sublattice(len(orders), diag))


class Sublattice:
    """
    A subgroup of ``Z^n`` given by generators (the columns of an
    ``n x g`` matrix).

    :param ambient_rank: ``n``.
    :param generators: ``n x g`` integer matrix.
    """
    def __init__(self, ambient_rank: int, generators: IntMatrix) -> None:
        if generators.rows != ambient_rank:
            raise LatticeError(
                'generators have length {}, ambient rank is {}'.format(
                    generators.rows, ambient_rank)
            )
        self.ambient_rank = ambient_rank
        self.generators = generators
        self._decomposition = None

    def __repr__(self):
        return '{}(ambient_rank={}, generators={})'.format(
            type(self).__name__,
            self.ambient_rank,
            [list(c) for c in self.generators.columns()],
        )

    @classmethod
    def from_vectors(cls, ambient_rank: int,
                     vectors: Iterable[Sequence[int]]) -> 'Sublattice':
        vectors = [tuple(v) for v in vectors]
        return cls(ambient_rank,
                   IntMatrix.from_columns(vectors, rows=ambient_rank))

    @classmethod
    def full(cls, ambient_rank: int) -> 'Sublattice':
        return cls(ambient_rank, IntMatrix.identity(ambient_rank))

    def _decompose(self):
        if self._decomposition is None:
            u, u_inv, s, _ = _snf(self.generators)
            diag = [s[i][i] for i in range(min(len(s), self.generators.cols))]
            diag = [d for d in diag if d]
            self._decomposition = (u, u_inv, diag)
        return self._decomposition

    @property
    def rank(self) -> int:
        return len(self._decompose()[2])

    def basis(self) -> List[Vector]:
        """
        A Z-basis of the sublattice.
        """
        _, u_inv, diag = self._decompose()
        return [
            tuple(d * u_inv[row][i] for row in range(self.ambient_rank))
            for i, d in enumerate(diag)
        ]

    def _transformed(self, vector: Sequence[int]) -> List[int]:
        if len(vector) != self.ambient_rank:
            raise LatticeError('vector {} does not have length {}'.format(
                list(vector), self.ambient_rank))
        u, _, _ = self._decompose()
        return [sum(a * b for a, b in zip(row, vector)) for row in u]

    def contains(self, vector: Sequence[int]) -> bool:
        y = self._transformed(vector)
        diag = self._decompose()[2]
        return all(y[i] % d == 0 for i, d in enumerate(diag)) and \
            not any(y[len(diag):])

    def __contains__(self, vector):
        return self.contains(vector)

    def coordinates(self, vector: Sequence[int]) -> Vector:
        """
        Coordinates of ``vector`` with respect to :meth:`basis`.
        """
        if not self.contains(vector):
            raise LatticeError('{} is not in {!r}'.format(list(vector), self))
        y = self._transformed(vector)
        return tuple(y[i] // d for i, d in enumerate(self._decompose()[2]))

    def reduce(self, vector: Sequence[int]) -> Vector:
        """
        The representative of ``vector + self`` that
        :func:`coset_representatives` lists for its coset.
        """
        y = self._transformed(vector)
        _, u_inv, diag = self._decompose()
        for i, d in enumerate(diag):
            y[i] %= d
        return tuple(
            sum(u_inv[row][i] * y[i] for i in range(self.ambient_rank))
            for row in range(self.ambient_rank)
        )

    def scaled(self, factor: int) -> 'Sublattice':
        return Sublattice(self.ambient_rank, IntMatrix(
            self.generators.rows,
            self.generators.cols,
            [factor * e for e in self.generators.entries],
        ))

    def is_sublattice_of(self, other: 'Sublattice') -> bool:
        return all(other.contains(c) for c in self.generators.columns())

    def same_lattice(self, other: 'Sublattice') -> bool:
        return self.is_sublattice_of(other) and other.is_sublattice_of(self)

    def index_in(self, other: Optional['Sublattice'] = None) -> Optional[int]:
        return quotient_invariants(self, within=other).order


def _relative(gamma: Sublattice, within: Sublattice) -> Sublattice:
    """
    ``gamma`` rewritten in the coordinates of a basis of ``within``.
    """
    if gamma.ambient_rank != within.ambient_rank:
        raise LatticeError('ambient ranks differ: {} vs {}'.format(
            gamma.ambient_rank, within.ambient_rank))
    coordinates = [within.coordinates(c) for c in gamma.generators.columns()]
    return Sublattice(
        within.rank, IntMatrix.from_columns(coordinates, rows=within.rank)
    )


def quotient_invariants(
        gamma: Sublattice, within: Optional[Sublattice] = None
) -> Quotient:
    """
    The quotient ``Z^n / gamma`` (or ``within / gamma``) as invariant
    factors greater than 1 plus a free rank.

    :param gamma: The subgroup.
    :param within: Optional ambient lattice containing ``gamma``.
    :return: The quotient group.
    """
    if within is not None:
        return quotient_invariants(_relative(gamma, within))

    diag = gamma._decompose()[2]
    return Quotient(
        torsion=[d for d in diag if d > 1],
        free=gamma.ambient_rank - len(diag),
    )


def congruence_kernel(c: IntMatrix, modulus: int) -> Sublattice:
    """
    The kernel of ``Z^n -> (Z_M)^n``, ``λ -> c·λ mod M``.

    :param c: An ``n x n`` integer matrix.
    :param modulus: ``M >= 1``.
    :return: Generators of the kernel lattice.
    """
    if c.rows != c.cols:
        raise LatticeError('congruence matrix must be square, got {}x{}'.format(
            c.rows, c.cols))
    return kernel_mod(c, modulus)


def kernel_mod(c: IntMatrix, modulus: int) -> Sublattice:
    """
    Like :func:`congruence_kernel` for a rectangular ``c``.
    """
    if modulus < 1:
        raise LatticeError('modulus must be positive, got {}'.format(modulus))

    n = c.cols
    _, _, s, v = _snf(c)
    generators = []
    for i in range(n):
        d = s[i][i] if i < c.rows else 0
        factor = modulus // math.gcd(modulus, d)
        generators.append(tuple(factor * v[row][i] for row in range(n)))

    return Sublattice.from_vectors(n, generators)


def coset_representatives(
        gamma: Sublattice, within: Optional[Sublattice] = None
) -> List[Vector]:
    """
    One vector from each coset of ``gamma`` in ``Z^n`` (or in ``within``),
    the zero vector first.

    :raise: :class:`lietori.exceptions.LatticeError` if the quotient is
        infinite.
    """
    if within is not None:
        basis = within.basis()
        local = coset_representatives(_relative(gamma, within))
        return [
            tuple(sum(y[i] * basis[i][row] for i in range(len(basis)))
                  for row in range(gamma.ambient_rank))
            for y in local
        ]

    _, u_inv, diag = gamma._decompose()
    if len(diag) < gamma.ambient_rank:
        raise LatticeError('quotient of {!r} is infinite'.format(gamma))

    representatives = []
    for y in itertools.product(*[range(d) for d in diag]):
        representatives.append(tuple(
            sum(u_inv[row][i] * y[i] for i in range(len(y)))
            for row in range(gamma.ambient_rank)
        ))

    return representatives


def mod2_rank(vectors: Iterable[Sequence[int]]) -> int:
    """
    Dimension of the Z_2-span of the vectors reduced mod 2.
    """
    pivots = {}
    for vector in vectors:
        bits = sum(1 << i for i, x in enumerate(vector) if x % 2)
        while bits:
            top = bits.bit_length() - 1
            if top not in pivots:
                pivots[top] = bits
                break
            bits ^= pivots[top]
    return len(pivots)
