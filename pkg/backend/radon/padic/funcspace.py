import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from .cells import (RATIONAL, Cell, CellFunction, combined_ring,
                    make_cell_function)
from .exceptions import (IndeterminateValuationError, PAdicError,
                         SupportBoundError)
from .scalars import as_coordinates, power, valuation, vector_valuation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvarianceCertificate:
    """phi(x') = phi(x) whenever v(x' - x) >= v(x) + level."""

    level: int

    def __post_init__(self):
        if self.level < 0:
            raise PAdicError(
                'Уровень инвариантности должен быть неотрицательным'
            )


def invariance_level(f):
    """Smallest certificate of a C_c function, read off its coarsest cells."""
    coarse = f.coarsen()
    levels = [
        cell.relative_level
        for cell in coarse.cells
        if not cell.contains_zero
    ]
    return InvarianceCertificate(max(levels, default=0))


def shell_cells(q, n, v, r):
    """Cells of level v + r covering the shell v(x) = v."""
    r = max(r, 1)
    scale = power(q, v)
    for digits in itertools.product(range(q ** r), repeat=n):
        if all(d % q == 0 for d in digits):
            continue
        yield Cell(q, v + r, tuple(scale * d for d in digits))


@dataclass(frozen=True)
class LazyShellFunction:
    """A function on F^n minus 0 known through an exact evaluator.

    ``support_bound`` R makes it an element of C_{<=R}; ``support_floor``
    marks elements of C_{>=R}.  Either may be None when unbounded on that
    side.
    """

    q: int
    n: int
    evaluator: object
    invariance: InvarianceCertificate
    support_bound: int = None
    support_floor: int = None
    value_ring: str = RATIONAL

    @property
    def r(self):
        return self.invariance.level

    def __call__(self, point):
        point = as_coordinates(point)
        if not any(point):
            raise IndeterminateValuationError(
                'Функция из C_- не определена в нуле'
            )
        v = vector_valuation(point, self.q)
        if self.support_bound is not None and v > self.support_bound:
            return Fraction(0)
        if self.support_floor is not None and v < self.support_floor:
            return Fraction(0)
        return self.evaluator(point)

    @classmethod
    def from_cell_function(cls, f):
        if f.is_zero:
            low = high = 0
        else:
            low, high = f.shells
        return cls(
            f.q,
            f.n,
            f,
            invariance_level(f),
            support_bound=high,
            support_floor=low,
            value_ring=f.value_ring,
        )

    def shell_window(self, low, high):
        if self.support_floor is not None:
            low = max(low, self.support_floor)
        if self.support_bound is not None:
            high = min(high, self.support_bound)
        return range(low, high + 1)

    def to_cell_function(self, low, high):
        """Tabulate the shells low..high as an element of C_c."""
        mapping = {}
        for v in self.shell_window(low, high):
            for cell in shell_cells(self.q, self.n, v, self.r):
                value = self(cell.center)
                if value:
                    mapping[cell] = value
        logger.debug(
            'Восстановлено %d ячеек на слоях [%d, %d]', len(mapping), low, high
        )
        return CellFunction.from_mapping(self.q, self.n, mapping).coarsen()


def shell_table(phi, level, low, high=None):
    """phi, constant on cosets of pi^level O^n, tabulated from shell low.

    Shells low .. min(high, level) - 1 are covered by cosets; when ``high``
    is None or above ``level`` the coset pi^level O^n of 0 is added with the
    value of phi at a nonzero point of it.
    """
    q, n = phi.q, phi.n
    top = level if high is None else min(high, level)
    mapping = {}
    for v in range(low, top):
        for cell in shell_cells(q, n, v, level - v):
            value = phi(cell.center)
            if value:
                mapping[cell] = value
    if high is None or high > level:
        value = phi((power(q, level),) + (Fraction(0),) * (n - 1))
        if value:
            mapping[Cell(q, level, (Fraction(0),) * n)] = value
    return CellFunction.from_mapping(q, n, mapping, contains_zero=True)


@dataclass(frozen=True)
class MultKernel:
    """A finitely supported element of A_- and A_+ with respect to d^x t."""

    function: CellFunction

    def __post_init__(self):
        if self.function.n != 1:
            raise PAdicError('Ядро свертки задается функцией на F')
        if self.function.zero_cell is not None:
            raise PAdicError('Ядро свертки не может содержать 0 в носителе')

    @property
    def q(self):
        return self.function.q

    @property
    def is_zero(self):
        return self.function.is_zero

    @property
    def a_min(self):
        return self.function.shells[0]

    @property
    def a_max(self):
        return self.function.shells[1]

    @classmethod
    def shell_indicator(cls, q, v):
        """The indicator of pi^v O^x."""
        return cls.from_shells(q, {v: 1})

    @classmethod
    def from_shells(cls, q, coefficients):
        cells, coeffs = [], []
        for v, coeff in coefficients.items():
            for cell in shell_cells(q, 1, v, 1):
                cells.append(cell)
                coeffs.append(coeff)
        return cls(make_cell_function(cells, coeffs, q=q, n=1))

    def __call__(self, t):
        return self.function((t,))

    def refined_terms(self, r):
        """Cells of relative level >= r; t^{-1} x keeps its K_r class."""
        stack = list(self.function.terms)
        while stack:
            cell, coeff = stack.pop()
            if cell.relative_level >= r:
                yield cell, coeff
            else:
                stack.extend((child, coeff) for child in cell.children())

    def __add__(self, other):
        return MultKernel(self.function + other.function)

    def scale(self, factor):
        return MultKernel(self.function.scale(factor))


def _weighted_dilations(kernel, r):
    """(c, weight) pairs with alpha * phi = sum weight * phi(c^{-1} .)."""
    for cell, coeff in kernel.refined_terms(r):
        center = cell.center[0]
        w = valuation(center, kernel.q)
        yield center, coeff * power(kernel.q, w - cell.level)


def mult_convolve(alpha, phi):
    """(alpha * phi)(x) = integral of alpha(t) phi(t^{-1} x) d^x t."""
    if isinstance(phi, LazyShellFunction):
        return _mult_convolve_lazy(alpha, phi)
    if alpha.is_zero or phi.is_zero:
        return CellFunction.from_mapping(phi.q, phi.n, {}, phi.contains_zero)
    r = invariance_level(phi).level
    parts = [
        phi.dilate(center).scale(weight)
        for center, weight in _weighted_dilations(alpha, r)
    ]
    result = CellFunction.combine(phi.q, phi.n, parts, phi.contains_zero)
    if not result.is_zero and not phi.contains_zero:
        low, high = result.shells
        phi_low, phi_high = phi.shells
        if high > phi_high + alpha.a_max or low < phi_low + alpha.a_min:
            raise SupportBoundError(
                f'Носитель свертки [{low}, {high}] вышел за границы '
                f'[{phi_low + alpha.a_min}, {phi_high + alpha.a_max}]'
            )
    return result


def _mult_convolve_lazy(alpha, phi):
    terms = list(_weighted_dilations(alpha, phi.r))

    def evaluator(point):
        total = Fraction(0)
        for center, weight in terms:
            value = phi(tuple(c / center for c in point))
            if value:
                total = total + weight * value
        return total

    bound, floor = phi.support_bound, phi.support_floor
    if not alpha.is_zero:
        if bound is not None:
            bound += alpha.a_max
        if floor is not None:
            floor += alpha.a_min
    return LazyShellFunction(
        phi.q,
        phi.n,
        evaluator,
        phi.invariance,
        support_bound=bound,
        support_floor=floor,
        value_ring=combined_ring(phi.value_ring, alpha.function.value_ring),
    )


def kernel_convolve(first, second):
    """alpha_1 * alpha_2 as a kernel on F^x."""
    return MultKernel(mult_convolve(first, second.function))


def sigma(alpha, n):
    """sigma(alpha)(t) = alpha(t^{-1}) |t|^{-n}."""
    q = alpha.q
    mapping = {}
    for cell, coeff in alpha.function.terms:
        center = cell.center[0]
        w = valuation(center, q)
        image = Cell(q, cell.level - 2 * w, (1 / center,))
        mapping[image] = coeff * power(q, -w * n)
    return MultKernel(CellFunction.from_mapping(q, 1, mapping))
