"""Gamma ratios, orthogonal polynomials and Gauss-Jacobi rules."""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from django.conf import settings
from scipy import special

from .exceptions import DomainError, PoleError

logger = logging.getLogger(__name__)

MAX_EXACT_SHIFT = 64
GRADING_LEVELS = 8
MIN_PANEL_ORDER = 16


def default_order():
    return settings.RADON['QUADRATURE_ORDER']


def _is_pole(z):
    z = complex(z)
    return z.imag == 0 and z.real <= 0 and z.real == round(z.real)


def _is_real(*values):
    return all(complex(v).imag == 0 for v in values)


def log_gamma(z):
    """Principal branch of log Gamma on the complex plane."""
    if _is_pole(z):
        raise PoleError(f'Γ имеет полюс в точке {z}')
    return complex(special.loggamma(complex(z)))


def gamma(z):
    if _is_pole(z):
        raise PoleError(f'Γ имеет полюс в точке {z}')
    if _is_real(z):
        return float(special.gamma(complex(z).real))
    return complex(np.exp(log_gamma(z)))


def _rising(x, count):
    result = 1
    for j in range(count):
        result *= x + j
    return result


def gamma_ratio(a, b):
    """Gamma(a) / Gamma(b).

    A pole of the numerator alone raises PoleError, a pole of the
    denominator alone gives 0 and simultaneous poles give the limit.
    Integer differences are evaluated as finite products.
    """
    a_pole, b_pole = _is_pole(a), _is_pole(b)
    if a_pole and b_pole:
        ma, mb = -round(complex(a).real), -round(complex(b).real)
        return (-1) ** (ma - mb) * math.factorial(mb) / math.factorial(ma)
    if a_pole:
        raise PoleError(f'Γ({a}) в числителе имеет полюс')
    if b_pole:
        return 0.0
    real = _is_real(a, b)
    if real:
        a, b = complex(a).real, complex(b).real
    shift = complex(a - b)
    if (shift.imag == 0 and shift.real == round(shift.real)
            and abs(shift.real) <= MAX_EXACT_SHIFT):
        count = round(shift.real)
        if count >= 0:
            return _rising(b, count)
        return 1 / _rising(a, -count)
    value = np.exp(log_gamma(a) - log_gamma(b))
    return float(value.real) if real else complex(value)


def sphere_area(d):
    """Surface area of the unit sphere S^d in R^(d+1)."""
    if d < 0:
        raise DomainError(f'Размерность сферы должна быть >= 0, а не {d}')
    return 2 * math.pi ** ((d + 1) / 2) / gamma((d + 1) / 2)


def gegenbauer(k, lam, t):
    """C_k^lam(t); lam = 0 gives Chebyshev T_k, the normalized limit."""
    if lam == 0:
        return special.eval_chebyt(k, t)
    return special.eval_gegenbauer(k, lam, t)


def jacobi(m, a, b, t):
    return special.eval_jacobi(m, a, b, t)


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Gauss rule for the weight (1 - x)^a (1 + x)^b on [-1, 1]."""

    nodes: np.ndarray
    weights: np.ndarray
    a: float
    b: float
    order: int

    @property
    def mass(self):
        return float(self.weights.sum())

    def integrate(self, function):
        return np.dot(self.weights, function(self.nodes))

    def mapped(self, lo, hi):
        """Nodes and weights for (hi - t)^a (t - lo)^b on [lo, hi].

        ``lo`` and ``hi`` may be arrays; the result gets a trailing axis of
        quadrature nodes.
        """
        lo = np.asarray(lo, dtype=float)[..., None]
        hi = np.asarray(hi, dtype=float)[..., None]
        half = (hi - lo) / 2
        nodes = lo + half * (1 + self.nodes)
        weights = self.weights * half ** (self.a + self.b + 1)
        return nodes, weights


@lru_cache(maxsize=256)
def gauss_jacobi(order, a, b):
    if a <= -1 or b <= -1:
        raise DomainError(
            f'Вес (1 - x)^{a} (1 + x)^{b} не интегрируем на [-1, 1]'
        )
    nodes, weights = special.roots_jacobi(order, a, b)
    logger.debug('Правило Гаусса-Якоби: порядок %d, a=%s, b=%s', order, a, b)
    return QuadratureRule(nodes, weights, float(a), float(b), order)


@lru_cache(maxsize=64)
def graded_rule(order, exponent=0.0, levels=GRADING_LEVELS):
    """Composite rule for int_0^1 f(x) (1 - x)^exponent dx.

    Panel widths halve towards both ends of [0, 1] so that the boundary
    layers of high bump derivatives are resolved.  The panel touching
    x = 1 carries the Jacobi weight, the others a Legendre rule times
    the weight.
    """
    left = [2.0 ** -j for j in range(levels, 0, -1)]
    right = [1 - 2.0 ** -j for j in range(2, levels + 1)]
    edges = np.array([0.0] + left + right + [1.0])
    panel_order = max(MIN_PANEL_ORDER, order // (len(edges) - 1))
    nodes, weights = gauss_jacobi(panel_order, 0, 0).mapped(
        edges[:-2], edges[1:-1]
    )
    weights = weights * (1 - nodes) ** exponent
    last_nodes, last_weights = gauss_jacobi(
        panel_order, exponent, 0
    ).mapped(edges[-2], 1.0)
    nodes = np.concatenate([nodes.ravel(), last_nodes.ravel()])
    weights = np.concatenate([weights.ravel(), last_weights.ravel()])
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def finite_part_integral(b, lam, order=None):
    """FP of the integral of t^b (1 - t^2)^lam over (0, 1).

    Where the integral converges the Gauss-Jacobi value is returned; below
    that the Beta-function continuation in b is used.
    """
    if complex(b).imag == 0 and complex(b).real > -1:
        rule = gauss_jacobi(order or default_order(), lam, complex(b).real)
        nodes, weights = rule.mapped(0.0, 1.0)
        return float(np.sum(weights * (1 + nodes) ** lam))
    half = (b + 1) / 2
    try:
        return gamma_ratio(half, half + lam + 1) * gamma(lam + 1) / 2
    except PoleError as exc:
        raise PoleError(
            f'Конечная часть интеграла t^{b} (1 - t^2)^{lam} имеет полюс'
        ) from exc
