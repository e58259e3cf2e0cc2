import logging
from fractions import Fraction

from .cyclotomic import to_value
from .exceptions import PAdicError
from .funcspace import shell_cells
from .radon import RegularizedPower, nonzero_vector, radon_slice
from .scalars import dot, power, vector_valuation

logger = logging.getLogger(__name__)

METHODS = ('shells', 'cells')


def chernov_constant(q, n):
    return (1 - power(q, n - 1)) / (
        (1 - power(q, -1)) * (1 - power(q, -n))
    )


def _ball_integral(origin, j, level):
    """Integral over b in pi^j O of <|s|^(-n), 1_{b + pi^level O}>."""
    q, n = origin.q, origin.n
    at_zero = origin.pair_ball(0, level)
    if j >= level:
        return power(q, -j) * at_zero
    total = power(q, -level) * at_zero
    for v in range(j, level):
        total += power(q, (n - 1) * v - level) * (1 - power(q, -1))
    return total


def _sphere_average(origin, offset, level):
    """Integral over ||eta|| = 1 of the pairing with eta . offset + pi^level O.

    eta -> eta . offset pushes the unit sphere forward to the density
    q^e 1_{pi^e O} - q^(e + 1 - n) 1_{pi^(e + 1) O}, e = v(offset).
    """
    q, n = origin.q, origin.n
    if not any(offset) or vector_valuation(offset, q) >= level:
        return origin.pair_ball(0, level) * (1 - power(q, -n))
    e = vector_valuation(offset, q)
    return (
        power(q, e) * _ball_integral(origin, e, level)
        - power(q, e + 1 - n) * _ball_integral(origin, e + 1, level)
    )


def _by_shells(f, x, origin):
    total = Fraction(0)
    for cell, coeff in f.terms:
        offset = tuple(c - y for c, y in zip(cell.center, x))
        total = total + coeff * power(f.q, cell.level * (1 - f.n)) \
            * _sphere_average(origin, offset, cell.level)
    return total


def _by_cells(f, x, origin):
    q, n = f.q, f.n
    depth = 1
    offsets = []
    for cell, coeff in f.terms:
        offset = tuple(c - y for c, y in zip(cell.center, x))
        offsets.append((cell.level, coeff, offset))
        if any(offset):
            depth = max(depth, cell.level - vector_valuation(offset, q))
    measure = power(q, -depth * n)
    total = Fraction(0)
    count = 0
    for eta in shell_cells(q, n, 0, depth):
        count += 1
        for level, coeff, offset in offsets:
            total = total + coeff * power(q, level * (1 - n)) * measure \
                * origin.pair_ball(dot(eta.center, offset), level)
    logger.debug('Формула Чернова: %d ячеек единичной сферы', count)
    return total


def chernov_invert(f, x, method='shells'):
    """f(x) recovered from the Radon transform of f.

    f(x) = kappa * integral over ||eta|| = 1 of the pairing of |s|^(-n)
    with s -> Rf(eta, s + eta . x), kappa = (1 - q^(n-1)) /
    ((1 - q^-1)(1 - q^-n)).
    """
    if method not in METHODS:
        raise PAdicError(f'Неизвестный способ вычисления: {method}')
    x, _ = nonzero_vector(x, f.q)
    origin = RegularizedPower(f.q, f.n)
    compute = _by_shells if method == 'shells' else _by_cells
    return to_value(chernov_constant(f.q, f.n) * compute(f, x, origin))


def cavalieri_integral(f, xi):
    """Integral of Rf(xi, s) ds; the same number for every xi."""
    return radon_slice(f, xi).integrate()


def kochubei_integral(x, q=None):
    """The regularized integral of |eta . x|^(-n) over the unit sphere."""
    q = x.q if q is None else q
    x, e = nonzero_vector(x, q)
    n = len(x)
    origin = RegularizedPower(q, n)
    return to_value(
        power(q, e) * origin.pair_ball(0, e)
        - power(q, e + 1 - n) * origin.pair_ball(0, e + 1)
    )
