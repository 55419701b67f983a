"""
Exact arithmetic in the cyclotomic fields ``Q(ζ_M)``.

Every structure constant, involution factor and ``ad(h)`` eigenvalue that
shows up in the classical Lie torus constructions lives in ``Q(ζ_M)`` for a
suitable ``M``. Elements are stored fully reduced modulo the ``M``-th
cyclotomic polynomial, so equality is a coefficient comparison.
"""
import functools
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import sympy

from .exceptions import CyclotomicError


_X = sympy.Symbol('x')

Scalar = Union[int, Fraction]


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> Tuple[int, ...]:
    """
    Return ``Φ_M`` as a tuple of integer coefficients, lowest degree first.

    ``Φ_M`` is computed by exact division of ``x^M - 1`` by the product of
    ``Φ_d`` over the proper divisors ``d`` of ``M``.

    :param order: The order ``M`` (at least 1).
    :raise: :class:`lietori.exceptions.CyclotomicError` for ``M < 1``.
    :return: Coefficients of ``Φ_M``.
    """
    if order < 1:
        raise CyclotomicError(
            'cyclotomic order must be positive, got {}'.format(order)
        )

    numerator = sympy.Poly(_X ** order - 1, _X, domain='ZZ')

    for divisor in _divisors(order)[:-1]:
        factor = sympy.Poly(
            list(reversed(cyclotomic_polynomial(divisor))), _X, domain='ZZ'
        )
        numerator, remainder = sympy.div(numerator, factor, domain='ZZ')
        assert remainder.is_zero

    return tuple(int(c) for c in reversed(numerator.all_coeffs()))


@functools.lru_cache(maxsize=None)
def _degree(order: int) -> int:
    return len(cyclotomic_polynomial(order)) - 1


@functools.lru_cache(maxsize=None)
def _power_residues(order: int) -> Tuple[Tuple[int, ...], ...]:
    """
    ``x^j mod Φ_M`` for ``0 <= j < max(M, 2φ(M) - 1)``, as integer vectors.
    """
    phi = cyclotomic_polynomial(order)
    degree = len(phi) - 1
    residues = []
    current = [0] * degree
    current[0] = 1

    for _ in range(max(order, 2 * degree - 1)):
        residues.append(tuple(current))
        # Multiply by x and fold the overflow using the monic Φ_M.
        overflow = current[-1]
        current = [0] + current[:-1]
        if overflow:
            current = [
                c - overflow * phi[i] for i, c in enumerate(current)
            ]

    return tuple(residues)


def _reduce(order: int, coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    degree = _degree(order)
    if len(coeffs) <= degree:
        return tuple(coeffs) + (Fraction(0),) * (degree - len(coeffs))

    residues = _power_residues(order)
    reduced = list(coeffs[:degree])
    for j in range(degree, len(coeffs)):
        c = coeffs[j]
        if c:
            for i, r in enumerate(residues[j % order]):
                if r:
                    reduced[i] += c * r

    return tuple(reduced)


class Cyclotomic:
    """
    An element of ``Q(ζ_M)``, stored as ``φ(M)`` rational coefficients of
    ``1, ζ, ..., ζ^{φ(M)-1}``.

    Values are immutable. Arithmetic between elements of different orders
    raises :class:`lietori.exceptions.CyclotomicError`; use :meth:`embed` to
    move to a common order first.

    :param order: The order ``M``.
    :param coeffs: Coefficients, lowest power first. Longer sequences are
        reduced modulo ``Φ_M``.
    """
    __slots__ = ('order', 'coeffs', '_hash')

    def __init__(self, order: int, coeffs: Iterable[Scalar]) -> None:
        if order < 1:
            raise CyclotomicError(
                'cyclotomic order must be positive, got {}'.format(order)
            )

        self.order = order
        self.coeffs = _reduce(order, [Fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, order: int, coeffs: Tuple[Fraction, ...]) -> 'Cyclotomic':
        element = cls.__new__(cls)
        element.order = order
        element.coeffs = coeffs
        element._hash = None
        return element

    @classmethod
    def from_scalar(cls, order: int, value: Scalar) -> 'Cyclotomic':
        coeffs = [Fraction(0)] * _degree(order)
        coeffs[0] = Fraction(value)
        return cls._raw(order, tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> 'Cyclotomic':
        return cls.from_scalar(order, 0)

    @classmethod
    def one(cls, order: int) -> 'Cyclotomic':
        return cls.from_scalar(order, 1)

    def __repr__(self):
        return '{}(order={}, coeffs=[{}])'.format(
            type(self).__name__,
            self.order,
            ', '.join(str(c) for c in self.coeffs),
        )

    def __bool__(self):
        return any(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other) -> 'Cyclotomic':
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise CyclotomicError(
                    'order mismatch: {} vs {}'.format(self.order, other.order)
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_scalar(self.order, other)
        raise TypeError(
            'cannot combine Cyclotomic with {}'.format(type(other).__name__)
        )

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (CyclotomicError, TypeError):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        return Cyclotomic._raw(
            self.order,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(
                self.order, tuple(a * other for a in self.coeffs)
            )
        other = self._coerce(other)

        if len(self.coeffs) == 1:
            return Cyclotomic._raw(
                self.order, (self.coeffs[0] * other.coeffs[0],)
            )

        product = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        product[i + j] += a * b

        return Cyclotomic._raw(self.order, _reduce(self.order, product))

    __rmul__ = __mul__

    def inverse(self) -> 'Cyclotomic':
        """
        Multiplicative inverse, via the extended Euclidean algorithm against
        ``Φ_M``.

        :raise: :class:`lietori.exceptions.CyclotomicError` on zero.
        """
        if self.is_zero:
            raise CyclotomicError('division by zero in Q(zeta_{})'.format(
                self.order))

        return Cyclotomic._raw(
            self.order, _inverse_coeffs(self.order, self.coeffs)
        )

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def embed(self, order: int) -> 'Cyclotomic':
        """
        The same element viewed in ``Q(ζ_N)`` for a multiple ``N`` of the
        current order (``ζ_M = ζ_N^{N/M}``).
        """
        if order % self.order:
            raise CyclotomicError(
                'cannot embed order {} into order {}'.format(self.order, order)
            )

        step = order // self.order
        spread = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            spread[i * step] = c

        return Cyclotomic(order, spread)

    def to_json(self) -> Dict:
        return {
            'order': self.order,
            'coeffs': ['{}/{}'.format(c.numerator, c.denominator)
                       for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: Dict) -> 'Cyclotomic':
        try:
            return cls(data['order'], [Fraction(c) for c in data['coeffs']])
        except (KeyError, TypeError, ValueError) as e:
            raise CyclotomicError(
                'invalid cyclotomic JSON {}: {}'.format(data, e)
            )


@functools.lru_cache(maxsize=4096)
def _inverse_coeffs(order: int, coeffs: Tuple[Fraction, ...]):
    if len(coeffs) == 1:
        return (1 / coeffs[0],)

    element = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
        _X,
        domain='QQ',
    )
    modulus = sympy.Poly(
        list(reversed(cyclotomic_polynomial(order))), _X, domain='QQ'
    )
    s, _, h = element.gcdex(modulus)
    assert h.degree() == 0 and h.LC() == 1

    inverse = [Fraction(int(c.p), int(c.q)) for c in reversed(s.all_coeffs())]
    return _reduce(order, inverse)


@functools.lru_cache(maxsize=None)
def root_of_unity(order: int, exponent: int) -> Cyclotomic:
    """
    Return ``ζ_M^e`` reduced modulo ``Φ_M``.

    :param order: The order ``M``.
    :param exponent: Any integer exponent ``e``.
    :return: The root of unity as a :class:`Cyclotomic`.
    """
    if order < 1:
        raise CyclotomicError(
            'cyclotomic order must be positive, got {}'.format(order)
        )

    residue = _power_residues(order)[exponent % order]
    return Cyclotomic._raw(order, tuple(Fraction(r) for r in residue))


def mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def inverse(a: Cyclotomic) -> Cyclotomic:
    return a.inverse()


def common_order(orders: Iterable[int]) -> int:
    """
    The order of the smallest cyclotomic field containing all the given
    ones.
    """
    result = 1
    for order in orders:
        result = result * order // math.gcd(result, order)
    return result


# -----------------------------------------------------------------------------
# Sparse exact linear algebra.
#
# Rows are dicts mapping column index to a nonzero Cyclotomic. The systems
# built by the component solvers have a handful of entries per row, so
# dense matrices would waste most of their time on zeros.

SparseRow = Dict[int, Cyclotomic]


def _axpy(target: SparseRow, coef: Cyclotomic, source: SparseRow) -> None:
    """
    ``target -= coef * source`` in place, dropping zeros.
    """
    for col, value in source.items():
        updated = target.get(col)
        delta = coef * value
        updated = -delta if updated is None else updated - delta
        if updated:
            target[col] = updated
        else:
            target.pop(col, None)


def row_reduce(rows: Iterable[SparseRow]) -> Dict[int, SparseRow]:
    """
    Reduced row echelon form of a sparse system.

    :param rows: The equations, as sparse rows.
    :return: Map from pivot column to its normalized row (pivot entry 1,
        zero in every other pivot column).
    """
    pivots = {}  # type: Dict[int, SparseRow]

    for row in rows:
        row = {c: v for c, v in row.items() if v}

        for col in [c for c in row if c in pivots]:
            coef = row.get(col)
            if coef:
                _axpy(row, coef, pivots[col])

        if not row:
            continue

        pivot_col = min(row)
        scale = row[pivot_col].inverse()
        row = {c: v * scale for c, v in row.items()}

        for other in pivots.values():
            coef = other.get(pivot_col)
            if coef:
                _axpy(other, coef, row)

        pivots[pivot_col] = row

    return pivots


def rank(rows: Iterable[SparseRow]) -> int:
    return len(row_reduce(rows))


def nullspace(
        rows: Iterable[SparseRow], ncols: int, order: int
) -> List[List[Cyclotomic]]:
    """
    A basis of the solutions ``v`` of ``rows · v = 0`` in ``Q(ζ_M)^ncols``.

    Basis vectors are indexed by the free columns in increasing order; the
    free column of each vector carries a 1.

    :param rows: The equations, as sparse rows.
    :param ncols: Number of unknowns.
    :param order: Cyclotomic order of the coefficient field.
    :return: Dense basis vectors.
    """
    pivots = row_reduce(rows)
    zero = Cyclotomic.zero(order)
    one = Cyclotomic.one(order)

    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vector = [zero] * ncols
        vector[free] = one
        for pivot_col, row in pivots.items():
            value = row.get(free)
            if value:
                vector[pivot_col] = -value
        basis.append(vector)

    return basis
