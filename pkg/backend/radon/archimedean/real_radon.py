"""Radon calculus on the isotypic components u(|x|) Y(x/|x|) of R^n.

Here Y is a harmonic of degree k.  Slice averaging acts on Y by the
zonal kernel a_k.  The transform restricted to the component is the
multiplicative convolution with alpha_k and is inverted by the
convolution with beta_k after Inv.
"""
import logging
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np
from scipy.linalg import null_space

from .exceptions import DomainError
from .jets import Jet
from .kernels import AlphaImage, AlphaKernel, BetaKernel, compare_mellin
from .specfun import (default_order, gamma, gamma_ratio, gauss_jacobi,
                      gegenbauer, sphere_area)
from .testfns import InvertedRadial, SectoralHarmonic

logger = logging.getLogger(__name__)


def _check_degree(n, k):
    if n < 2:
        raise DomainError(f'Размерность n должна быть >= 2, а не {n}')
    if k < 0:
        raise DomainError(f'Степень k должна быть >= 0, а не {k}')


def a_k_eval(n, k, t):
    """Gegenbauer C_k^((n-2)/2) normalized by a_k(1) = 1."""
    _check_degree(n, k)
    lam = (n - 2) / 2
    return gegenbauer(k, lam, t) / gegenbauer(k, lam, 1.0)


def a_k_direct(n, k, t, order=None):
    """Average of Re((x_1 + i x_2)^k) over the slice {x_1 = t} of S^(n-1).

    For n = 2 the slice is two points.  Otherwise x_2 = sqrt(1 - t^2) u
    with u distributed on [-1, 1] like a coordinate of S^(n-2), that is
    with density proportional to (1 - u^2)^((n - 4) / 2).
    """
    _check_degree(n, k)
    t = np.asarray(t, dtype=float)
    rho = np.sqrt(1 - t ** 2)
    harmonic = SectoralHarmonic(k)
    if n == 2:
        upper = np.stack([t, rho], axis=-1)
        lower = np.stack([t, -rho], axis=-1)
        return (harmonic(upper) + harmonic(lower)) / 2
    e = (n - 4) / 2
    rule = gauss_jacobi(order or default_order(), e, e)
    x = np.stack(
        np.broadcast_arrays(t[..., None], rho[..., None] * rule.nodes),
        axis=-1,
    )
    return harmonic(x) @ rule.weights / rule.mass


@dataclass(frozen=True)
class AlphaKernelReal(AlphaKernel):
    """mes(S^(n-2)) t^(-n) a_k(t) (1 - t^2)^((n-3)/2) dt on (0, 1)."""

    n: int
    k: int

    def __post_init__(self):
        _check_degree(self.n, self.k)

    @property
    def mass(self):
        return sphere_area(self.n - 2)

    @property
    def power(self):
        return -self.n

    @property
    def exponent(self):
        return (self.n - 3) / 2

    def zonal(self, t):
        return a_k_eval(self.n, self.k, t)

    def mellin_formula(self, s):
        n, k = self.n, self.k
        return (
            2 ** (n + k - 1) * math.pi ** ((n - 1) / 2)
            * gamma_ratio(s - n + 1, s + k)
            * gamma_ratio((s + k + 1) / 2, (s - n - k) / 2 + 1)
        )


@dataclass(frozen=True)
class BetaKernelReal(BetaKernel):
    """t^(k-1) (-d/dt)^(n+k-1) t^(-k+1) (1 - t^2)_+^((n+2k-3)/2), scaled.

    Paired with h the derivatives move onto t^(k-1) h, and the density
    t^(-k+1) (1 - t^2)^lambda is integrable for every n >= 2.
    """

    n: int
    k: int

    def __post_init__(self):
        _check_degree(self.n, self.k)

    @property
    def constant(self):
        n, k = self.n, self.k
        return 1 / (
            2 ** (n + k - 2) * math.pi ** ((n - 1) / 2)
            * gamma((n + 2 * k - 1) / 2)
        )

    @property
    def power(self):
        return 1 - self.k

    @property
    def exponent(self):
        return (self.n + 2 * self.k - 3) / 2

    @property
    def derivatives(self):
        return self.n + self.k - 1

    @property
    def shift(self):
        return -self.n

    def operate(self, jet, points):
        weight = Jet.variable(points, self.derivatives).power(self.k - 1)
        return (jet * weight).derivative(self.derivatives)

    def symbol(self, s):
        exponent = s + self.k - 1
        return reduce(
            lambda acc, i: acc * (exponent - i), range(self.derivatives), 1
        )


def alpha_convolve(n, k, u, r, order=None):
    return AlphaKernelReal(n, k).convolve(u, r, order)


def alpha_image(n, k, u, order=None):
    return AlphaImage(AlphaKernelReal(n, k), u, order)


def mellin_alpha(n, k, s, order=None):
    """Quadrature and Gamma-formula values of int t^s d(alpha_k)."""
    return compare_mellin(AlphaKernelReal(n, k), s, order)


def beta_pair(n, k, h, order=None):
    return BetaKernelReal(n, k).pair(h, order)


def beta_convolve(n, k, g, r, order=None):
    return BetaKernelReal(n, k).convolve(g, r, order)


def inv_radial(n, phi):
    """g(r) = r^(-n) phi(1/r); the harmonic factor is unchanged."""
    return InvertedRadial(phi, n)


def m_radial(n, k, u, order=None):
    """Radial part of M(u (x) Y) on the degree-k component."""
    return inv_radial(n, alpha_image(n, k, u, order))


def minv_apply(n, k, phi, r, order=None):
    return beta_convolve(n, k, inv_radial(n, phi), r, order)


def radon_isotypic(n, k, u, omega, t, order=None):
    """Rf(omega, t) = sgn(t)^k |t|^(n-1) Y(omega) (alpha_k * u)(|t|)."""
    omega = np.asarray(omega, dtype=float)
    t = float(t)
    if t == 0:
        raise DomainError('Формула через alpha_k требует t != 0')
    y = float(SectoralHarmonic(k)(omega))
    radial = alpha_convolve(n, k, u, abs(t), order)
    return math.copysign(1, t) ** k * abs(t) ** (n - 1) * y * radial


def _directions(n, omega, order):
    basis = null_space(omega[None, :])
    if n == 2:
        return np.stack([basis[:, 0], -basis[:, 0]]), np.ones(2)
    angles = 2 * math.pi * np.arange(order) / order
    directions = (
        np.cos(angles)[:, None] * basis[:, 0]
        + np.sin(angles)[:, None] * basis[:, 1]
    )
    return directions, np.full(order, 2 * math.pi / order)


def radon_direct(n, u, harmonic, omega, t, order=None):
    """Integral of u(|x|) Y(x / |x|) over the hyperplane omega . x = t.

    The plane is parameterized as t omega + s theta with theta on the unit
    sphere of the orthogonal complement: two points for n = 2, a circle
    integrated by the trapezoidal rule for n = 3.
    """
    if n not in (2, 3):
        raise DomainError(f'Прямая квадратура реализована для n = 2, 3, '
                          f'а не для n = {n}')
    order = order or default_order()
    omega = np.asarray(omega, dtype=float)
    omega = omega / np.linalg.norm(omega)
    t = float(t)
    if abs(t) >= u.upper:
        return 0.0
    lo = math.sqrt(max(u.lower ** 2 - t ** 2, 0.0))
    hi = math.sqrt(u.upper ** 2 - t ** 2)
    s, s_weights = gauss_jacobi(order, 0, 0).mapped(lo, hi)
    directions, d_weights = _directions(n, omega, order)
    x = (
        t * omega
        + s[:, None, None] * directions[None, :, :]
    )
    norm = np.linalg.norm(x, axis=-1)
    values = u(norm) * harmonic(x / norm[..., None])
    weights = (s_weights * s ** (n - 2))[:, None] * d_weights[None, :]
    logger.debug('Прямая квадратура Радона: n=%d, t=%s', n, t)
    return float(np.sum(weights * values))
