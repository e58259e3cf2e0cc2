import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicNumber, to_value
from .exceptions import CellOverlapError, PAdicError, ZeroInSupportError
from .scalars import (as_coordinates, check_prime, in_ball, power,
                      reduce_mod, valuation)

logger = logging.getLogger(__name__)

RATIONAL = 'rational'
CYCLOTOMIC = 'cyclotomic'


@dataclass(frozen=True, order=True)
class Cell:
    """The coset center + q^level O^n, stored with a canonical center."""

    q: int
    level: int
    center: tuple

    def __post_init__(self):
        object.__setattr__(
            self,
            'center',
            tuple(reduce_mod(c, self.q, self.level)
                  for c in as_coordinates(self.center)),
        )

    @property
    def dimension(self):
        return len(self.center)

    @property
    def measure(self):
        return power(self.q, -self.level * self.dimension)

    @property
    def contains_zero(self):
        return not any(self.center)

    @property
    def shell(self):
        """v(x) of every point of a cell that does not contain 0."""
        if self.contains_zero:
            raise ZeroInSupportError(
                'Ячейка содержит 0 и не лежит в одном слое'
            )
        return min(valuation(c, self.q) for c in self.center if c)

    @property
    def relative_level(self):
        return self.level - self.shell

    def contains(self, point):
        return all(
            in_ball(x, c, self.level, self.q)
            for x, c in zip(as_coordinates(point), self.center)
        )

    def contains_cell(self, other):
        return other.level >= self.level and self.contains(other.center)

    def relation(self, other):
        if self.contains_cell(other) or other.contains_cell(self):
            return 'nested'
        return 'disjoint'

    def children(self):
        step = power(self.q, self.level)
        for digits in itertools.product(range(self.q), repeat=self.dimension):
            yield Cell(
                self.q,
                self.level + 1,
                tuple(c + d * step for c, d in zip(self.center, digits)),
            )

    def parent(self):
        return Cell(self.q, self.level - 1, self.center)

    def dilate(self, factor):
        """Image of the cell under x -> factor * x."""
        factor = Fraction(factor)
        return Cell(
            self.q,
            self.level + valuation(factor, self.q),
            tuple(factor * c for c in self.center),
        )

    def transform(self, matrix, shift=0):
        """Image under q^shift * matrix; the matrix has a unit determinant."""
        scale = power(self.q, shift)
        return Cell(
            self.q,
            self.level + shift,
            tuple(
                scale * sum(
                    (Fraction(a) * c for a, c in zip(row, self.center)),
                    Fraction(0),
                )
                for row in matrix
            ),
        )


def value_ring_of(values):
    for value in values:
        if isinstance(value, CyclotomicNumber) and not value.is_rational:
            return CYCLOTOMIC
    return RATIONAL


def combined_ring(*rings):
    return CYCLOTOMIC if CYCLOTOMIC in rings else RATIONAL


def common_refinement(terms):
    """Sum of (cell, coeff) terms as a dict over pairwise disjoint cells.

    A cell is split into its children while it strictly contains one of the
    original cells; what remains is the coarsest disjoint family on which
    every summand is constant.
    """
    originals = {cell for cell, _ in terms}
    result = defaultdict(Fraction)
    stack = list(terms)
    while stack:
        cell, coeff = stack.pop()
        finer = any(
            other.level > cell.level and cell.contains(other.center)
            for other in originals
        )
        if finer:
            stack.extend((child, coeff) for child in cell.children())
        else:
            result[cell] = result[cell] + coeff
    return {cell: to_value(coeff) for cell, coeff in result.items() if coeff}


@dataclass(frozen=True)
class CellFunction:
    q: int
    n: int
    terms: tuple = ()
    contains_zero: bool = False
    value_ring: str = RATIONAL

    @property
    def cells(self):
        return tuple(cell for cell, _ in self.terms)

    @property
    def coeffs(self):
        return tuple(coeff for _, coeff in self.terms)

    @property
    def is_zero(self):
        return not self.terms

    @property
    def max_level(self):
        return max(cell.level for cell in self.cells)

    @property
    def shells(self):
        """(lowest, highest) shell met by the support of a C_c element."""
        values = [cell.shell for cell in self.cells]
        return min(values), max(values)

    @property
    def zero_cell(self):
        for cell, coeff in self.terms:
            if cell.contains_zero:
                return cell, coeff
        return None

    def __call__(self, point):
        point = as_coordinates(point)
        for cell, coeff in self.terms:
            if cell.contains(point):
                return coeff
        return Fraction(0)

    def integrate(self):
        return to_value(sum(
            (coeff * cell.measure for cell, coeff in self.terms), Fraction(0)
        ))

    @classmethod
    def from_mapping(cls, q, n, mapping, contains_zero=False):
        """Build a function from a dict of pairwise disjoint cells."""
        mapping = {cell: to_value(coeff) for cell, coeff in mapping.items()
                   if coeff}
        return cls(
            q,
            n,
            tuple(sorted(mapping.items())),
            contains_zero,
            value_ring_of(mapping.values()),
        )

    def integrate_over(self, ball):
        """Integral of f over a cell; cells are either nested or disjoint."""
        total = Fraction(0)
        for cell, coeff in self.terms:
            if cell.contains_cell(ball):
                total = total + coeff * ball.measure
            elif ball.contains_cell(cell):
                total = total + coeff * cell.measure
        return to_value(total)

    def _rebuild(self, mapping, contains_zero=None):
        contains_zero = (
            self.contains_zero if contains_zero is None else contains_zero
        )
        return CellFunction.from_mapping(
            self.q, self.n, mapping, contains_zero
        )

    def refine(self, level):
        if self.terms and level < self.max_level:
            raise PAdicError(
                f'Уровень {level} меньше максимального уровня ячеек '
                f'{self.max_level}'
            )
        mapping = {}
        stack = list(self.terms)
        while stack:
            cell, coeff = stack.pop()
            if cell.level == level:
                mapping[cell] = coeff
            else:
                stack.extend((child, coeff) for child in cell.children())
        return self._rebuild(mapping)

    def coarsen(self):
        """Merge complete sibling families carrying equal coefficients."""
        mapping = {cell: coeff for cell, coeff in self.terms if coeff}
        siblings = self.q ** self.n
        merged = True
        while merged:
            merged = False
            families = defaultdict(list)
            for cell in mapping:
                families[cell.parent()].append(cell)
            for parent, children in families.items():
                if len(children) != siblings:
                    continue
                values = {mapping[child] for child in children}
                if len(values) == 1:
                    for child in children:
                        del mapping[child]
                    mapping[parent] = values.pop()
                    merged = True
        return self._rebuild(mapping)

    def _check_compatible(self, other):
        if (self.q, self.n) != (other.q, other.n):
            raise PAdicError('Функции заданы над разными пространствами')

    def __add__(self, other):
        self._check_compatible(other)
        return self._rebuild(
            common_refinement(self.terms + other.terms),
            self.contains_zero or other.contains_zero,
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        if not factor:
            return self._rebuild({})
        return self._rebuild(
            {cell: to_value(coeff * factor) for cell, coeff in self.terms}
        )

    def dilate(self, factor):
        """The function x -> f(factor^{-1} x)."""
        return self._rebuild(
            {cell.dilate(factor): coeff for cell, coeff in self.terms}
        )

    def transform(self, matrix, shift=0):
        """The function x -> f(g^{-1} x) for g = q^shift * matrix."""
        return self._rebuild(
            {cell.transform(matrix, shift): coeff
             for cell, coeff in self.terms}
        )

    @classmethod
    def combine(cls, q, n, functions, contains_zero=False):
        terms = tuple(
            term for function in functions for term in function.terms
        )
        return cls.from_mapping(
            q,
            n,
            common_refinement(terms),
            contains_zero or any(f.contains_zero for f in functions),
        )


def make_cell_function(cells, coeffs, require_cc=True, q=None, n=None):
    cells = list(cells)
    coeffs = list(coeffs)
    if len(cells) != len(coeffs):
        raise PAdicError('Число ячеек не совпадает с числом коэффициентов')
    if cells:
        q = cells[0].q if q is None else q
        n = cells[0].dimension if n is None else n
    if q is None or n is None:
        raise PAdicError('Для пустой функции нужно указать q и n')
    check_prime(q)
    for cell in cells:
        if cell.q != q or cell.dimension != n:
            raise PAdicError(f'Ячейка {cell} не лежит в Q_{q}^{n}')
        if require_cc and cell.contains_zero:
            raise ZeroInSupportError(
                f'Ячейка уровня {cell.level} содержит 0, а функция должна '
                f'лежать в C_c'
            )
    for first, second in itertools.combinations(cells, 2):
        if first.relation(second) == 'nested':
            raise CellOverlapError(
                f'Ячейки {first.center}+π^{first.level} и '
                f'{second.center}+π^{second.level} пересекаются'
            )
    mapping = {
        cell: to_value(coeff) for cell, coeff in zip(cells, coeffs) if coeff
    }
    logger.debug('Собрана функция из %d ячеек над Q_%d^%d', len(mapping), q, n)
    return CellFunction.from_mapping(q, n, mapping, not require_cc)


def haar_measure(cell):
    return cell.measure


def integrate(f):
    return f.integrate()


def refine(f, level):
    return f.refine(level)
