import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .cells import Cell, CellFunction, common_refinement
from .cyclotomic import to_value
from .exceptions import (IndeterminateValuationError, PAdicError,
                         ShiftValueMismatchError, SupportBoundError)
from .funcspace import LazyShellFunction, invariance_level, shell_cells
from .scalars import (anchor_index, as_coordinates, dot, in_ball, power,
                      valuation, vector_valuation)

logger = logging.getLogger(__name__)


def nonzero_vector(xi, q):
    xi = as_coordinates(xi)
    if not any(xi):
        raise IndeterminateValuationError(
            'Гиперплоскость с нулевым вектором нормали не определена'
        )
    return xi, vector_valuation(xi, q)


def radon_M(f, xi):
    """Mf(xi): the integral of f over xi . x = 1 against d mu_xi.

    The image of c + pi^m O^n under x -> xi . x is the ball
    xi . c + pi^(m + v(xi)) O, and the fiber measure on it is the ratio of
    the two Haar measures, q^(-m(n-1) + v(xi)).
    """
    xi, v = nonzero_vector(xi, f.q)
    total = Fraction(0)
    for cell, coeff in f.terms:
        if in_ball(1, dot(xi, cell.center), cell.level + v, f.q):
            total = total + coeff * power(f.q, -cell.level * (f.n - 1) + v)
    return to_value(total)


def radon_slice(f, xi):
    """Rf(xi, .) as a Schwartz-Bruhat function on F."""
    xi, v = nonzero_vector(xi, f.q)
    terms = [
        (
            Cell(f.q, cell.level + v, (dot(xi, cell.center),)),
            coeff * power(f.q, -cell.level * (f.n - 1) + v),
        )
        for cell, coeff in f.terms
    ]
    return CellFunction.from_mapping(
        f.q, 1, common_refinement(terms), contains_zero=True
    )


def radon_M_as_function(f):
    """Mf as an element of C_{<=-R} for f supported in v >= R."""
    bound = -f.shells[0] if not f.is_zero else 0
    return LazyShellFunction(
        f.q,
        f.n,
        lambda xi: radon_M(f, xi),
        invariance_level(f),
        support_bound=bound,
        value_ring=f.value_ring,
    )


@dataclass(frozen=True)
class RegularizedPower:
    """|s - shift|^(-n), regularized by subtracting f(shift)."""

    q: int
    n: int
    shift: Fraction = Fraction(0)

    def pair_ball(self, center, level):
        """Pairing with the indicator of center + pi^level O."""
        q, n = self.q, self.n
        if in_ball(self.shift, center, level, q):
            return (
                -(1 - power(q, -1)) * power(q, (n - 1) * (level - 1))
                / (1 - power(q, -(n - 1)))
            )
        return power(q, n * valuation(Fraction(center) - self.shift, q)) \
            * power(q, -level)

    def pair(self, f):
        return to_value(sum(
            (coeff * self.pair_ball(cell.center[0], cell.level)
             for cell, coeff in f.terms),
            Fraction(0),
        ))


def pair_regularized(power_distribution, f, value_at_shift=None):
    if value_at_shift is not None:
        actual = f((power_distribution.shift,))
        if actual != value_at_shift:
            raise ShiftValueMismatchError(
                f'f({power_distribution.shift}) = {actual}, '
                f'а передано {value_at_shift}'
            )
    return power_distribution.pair(f)


@dataclass(frozen=True)
class BetaDistribution:
    """c (|s - 1|^(-n) - |s|^(-n)) with c = (1 - q^(n-1)) / (1 - q^(-n))."""

    q: int
    n: int

    @property
    def constant(self):
        return (1 - power(self.q, self.n - 1)) / (1 - power(self.q, -self.n))

    @property
    def powers(self):
        return (
            RegularizedPower(self.q, self.n, Fraction(1)),
            RegularizedPower(self.q, self.n, Fraction(0)),
        )

    def support_index(self, r):
        # For |s| > 1 the U-average of |s - 1|^(-n) is |s|^(-n), so beta_U
        # lives in O whatever r is.
        return 0

    def pair_ball(self, center, level):
        shifted, origin = self.powers
        return self.constant * (
            shifted.pair_ball(center, level) - origin.pair_ball(center, level)
        )

    def pair(self, f):
        return to_value(sum(
            (coeff * self.pair_ball(cell.center[0], cell.level)
             for cell, coeff in f.terms),
            Fraction(0),
        ))

    def u_average(self, f, r):
        """s -> average of f(us) over u in 1 + pi^r O."""
        if r < 1:
            raise PAdicError('Подгруппа U = 1 + π^r O требует r >= 1')
        zero = f.zero_cell
        shells = [cell.shell for cell in f.cells if not cell.contains_zero]
        if zero is not None:
            top = zero[0].level
        else:
            top = max(shells, default=0) + 1
        mapping = {}
        for w in range(min(shells, default=top), top):
            for ball in shell_cells(f.q, 1, w, r):
                average = f.integrate_over(ball) / ball.measure
                if average:
                    mapping[ball] = average
        if zero is not None:
            mapping[zero[0]] = zero[1]
        return CellFunction.from_mapping(f.q, 1, mapping, contains_zero=True)

    def pair_averaged(self, f, r):
        return self.pair(self.u_average(f, r))


def _anchor(x, q, anchor):
    index, w = anchor_index(x, q)
    if anchor is None:
        return index, w
    if not x[anchor] or valuation(x[anchor], q) != w:
        raise PAdicError(
            f'Координата {anchor} не имеет максимальной нормы '
            f'среди координат x'
        )
    return anchor, w


def stabilized_integral(phi, x, kernel, level=None, anchor=None):
    """I(Lambda) for the lattice Lambda that the support of phi dictates.

    Lambda is cut into cells of level v + r on every shell v; the image of a
    cell under xi -> xi . x is a ball of level v + r + v(x), and only the
    balls inside pi^i O (the support of the U-average of the kernel) are
    kept.  Shells with v + r + v(x) < i map onto balls containing pi^i O,
    and those contribute a multiple of the kernel's total mass, which is 0.
    """
    x, w = nonzero_vector(x, phi.q)
    if phi.support_bound is None:
        raise SupportBoundError(
            'Функция должна лежать в C_{<=R} с известной границей R'
        )
    q, n = phi.q, phi.n
    r = max(phi.r if level is None else level, 1)
    i = kernel.support_index(r)
    low = -w - r + i
    if phi.support_floor is not None:
        low = max(low, phi.support_floor)
    high = phi.support_bound
    j, _ = _anchor(x, q, anchor)
    others = [k for k in range(n) if k != j]
    accumulated = defaultdict(Fraction)
    evaluations = 0
    for v in range(low, high + 1):
        image_level = v + r + w
        floor = max(i, v + w)
        weight = power(q, image_level - (v + r) * n)
        scale = power(q, v)
        for digits in itertools.product(range(q ** r), repeat=n - 1):
            partial = sum(
                (scale * d * x[k] for d, k in zip(digits, others)),
                Fraction(0),
            )
            for e in range(q ** (image_level - floor)):
                s = power(q, floor) * e
                xi = [Fraction(0)] * n
                for d, k in zip(digits, others):
                    xi[k] = scale * d
                xi[j] = (s - partial) / x[j]
                if not any(xi) or vector_valuation(xi, q) != v:
                    continue
                evaluations += 1
                value = phi(xi)
                if value:
                    ball = Cell(q, image_level, (s,))
                    accumulated[ball] = accumulated[ball] + value * weight
    logger.debug(
        'Стабилизированный интеграл: слои [%d, %d], %d ячеек, %d образов',
        low, high, evaluations, len(accumulated),
    )
    return to_value(sum(
        (coeff * kernel.pair_ball(ball.center[0], ball.level)
         for ball, coeff in accumulated.items()),
        Fraction(0),
    ))


def lower_bound_after(phi, kernel):
    """A phi vanishes at every x with v(x) below this shell."""
    if phi.support_bound is None:
        raise SupportBoundError('Граница носителя R не задана')
    r = max(phi.r, 1)
    return kernel.support_index(r) - r - phi.support_bound


def apply_A_beta(phi, x, level=None, anchor=None):
    return stabilized_integral(
        phi, x, BetaDistribution(phi.q, phi.n), level=level, anchor=anchor
    )


def apply_A_beta_as_function(phi):
    return LazyShellFunction(
        phi.q,
        phi.n,
        lambda x: apply_A_beta(phi, x),
        phi.invariance,
        support_floor=lower_bound_after(phi, BetaDistribution(phi.q, phi.n)),
        value_ring=phi.value_ring,
    )
