"""Radon calculus on the H^{p,q}-isotypic components of C^n."""
import logging
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .exceptions import DomainError
from .jets import Jet
from .kernels import AlphaImage, AlphaKernel, BetaKernel, compare_mellin
from .specfun import (default_order, gamma, gamma_ratio, gauss_jacobi,
                      jacobi, sphere_area)
from .testfns import ComplexZonalHarmonic, InvertedRadial

logger = logging.getLogger(__name__)


def _check_bidegree(n, p, q):
    if n < 2:
        raise DomainError(f'Размерность n должна быть >= 2, а не {n}')
    if p < 0 or q < 0:
        raise DomainError(f'Бистепень ({p}, {q}) должна быть неотрицательной')


def a_pq_eval(n, p, q, t):
    """t^|p-q| P_m^(n-2,|p-q|)(2t^2 - 1) / P_m^(n-2,|p-q|)(1), m = min(p,q).

    The t^|p-q| factor makes a_{p,q} agree with the slice averages and
    with the Gamma formula for the Mellin transform of alpha_{p,q}.
    """
    _check_bidegree(n, p, q)
    t = np.asarray(t, dtype=float)
    d, m = abs(p - q), min(p, q)
    return (
        t ** d * jacobi(m, n - 2, d, 2 * t ** 2 - 1)
        / jacobi(m, n - 2, d, 1.0)
    )


def a_pq_direct(n, p, q, t, order=None):
    """Average of (z_1 + z_2)^p (conj z_1 - conj z_2)^q over {z_1 = t}.

    On the slice z = (t, rho w) with w on S^(2n-3) the harmonic depends on
    w_1 = R e^(i phi) only.  R = 1 for n = 2; otherwise R^2 has density
    (n - 2) (1 - R^2)^(n-3) on [0, 1].  phi is integrated by the
    trapezoidal rule.
    """
    _check_bidegree(n, p, q)
    order = order or default_order()
    t = np.asarray(t, dtype=float)
    rho = np.sqrt(1 - t ** 2)
    if n == 2:
        radii, radial_weights = np.ones(1), np.ones(1)
    else:
        nodes, radial_weights = gauss_jacobi(order, n - 3, 0).mapped(
            0.0, 1.0
        )
        radii = np.sqrt(nodes)
    angles = 2 * math.pi * np.arange(order) / order
    w1 = radii[:, None] * np.exp(1j * angles)[None, :]
    z = np.stack(
        np.broadcast_arrays(
            t[..., None, None], rho[..., None, None] * w1
        ),
        axis=-1,
    )
    values = ComplexZonalHarmonic(p, q)(z)
    averaged = (values * radial_weights[:, None]).sum(axis=(-2, -1))
    return np.real(averaged) / (order * radial_weights.sum())


@dataclass(frozen=True)
class AlphaKernelComplex(AlphaKernel):
    """mes(S^(2n-3)) t^(1-2n) a_{p,q}(t) (1 - t^2)^(n-2) dt on (0, 1)."""

    n: int
    p: int
    q: int

    def __post_init__(self):
        _check_bidegree(self.n, self.p, self.q)

    @property
    def mass(self):
        return sphere_area(2 * self.n - 3)

    @property
    def power(self):
        return 1 - 2 * self.n

    @property
    def exponent(self):
        return self.n - 2

    def zonal(self, t):
        return a_pq_eval(self.n, self.p, self.q, t)

    def mellin_formula(self, s):
        n, p, q = self.n, self.p, self.q
        d = abs(p - q)
        return (
            math.pi ** (n - 1)
            * gamma_ratio((s + d) / 2 - n + 1, (s + p + q) / 2)
            * gamma_ratio((s - d) / 2 - n + 1, (s - p - q) / 2 - n + 1)
        )


@dataclass(frozen=True)
class BetaKernelComplex(BetaKernel):
    """prod_j (-d/dt t + p + q - 2j) applied to t^(-p-q-2n+1)(1-t^2)_+^(m-1).

    Paired with h every factor turns into its adjoint t d/dt + p + q - 2j.
    For m = min(p, q) = 0 the regularized density is the delta at t = 1.
    """

    n: int
    p: int
    q: int

    def __post_init__(self):
        _check_bidegree(self.n, self.p, self.q)

    @property
    def m(self):
        return min(self.p, self.q)

    @property
    def delta(self):
        return self.m == 0

    @property
    def constant(self):
        n, m = self.n, self.m
        if self.delta:
            return 1 / (2 ** (n - 1) * math.pi ** (n - 1))
        return 1 / (2 ** (n + m - 2) * math.pi ** (n - 1) * gamma(m))

    @property
    def power(self):
        return -self.p - self.q - 2 * self.n + 1

    @property
    def exponent(self):
        return self.m - 1

    @property
    def derivatives(self):
        return self.n + self.m - 1

    def _factors(self):
        return [
            self.p + self.q - 2 * j for j in range(1, self.derivatives + 1)
        ]

    def operate(self, jet, points):
        for c in self._factors():
            t = Jet.variable(points, jet.order - 1)
            jet = t * jet.differentiate() + jet.truncate(jet.order - 1) * c
        return jet.value

    def symbol(self, s):
        return reduce(lambda acc, c: acc * (s + c), self._factors(), 1)


def alpha_pq_convolve(n, p, q, u, r, order=None):
    return AlphaKernelComplex(n, p, q).convolve(u, r, order)


def alpha_pq_image(n, p, q, u, order=None):
    return AlphaImage(AlphaKernelComplex(n, p, q), u, order)


def mellin_alpha_pq(n, p, q, s, order=None):
    return compare_mellin(AlphaKernelComplex(n, p, q), s, order)


def beta_pq_pair(n, p, q, h, order=None):
    return BetaKernelComplex(n, p, q).pair(h, order)


def beta_pq_convolve(n, p, q, g, r, order=None):
    return BetaKernelComplex(n, p, q).convolve(g, r, order)


def inv_radial_complex(n, phi):
    """g(r) = r^(-2n) phi(1/r); the harmonic factor is read at conj x."""
    return InvertedRadial(phi, 2 * n, conjugate=True)


def m_radial_complex(n, p, q, u, order=None):
    return inv_radial_complex(n, alpha_pq_image(n, p, q, u, order))


def minv_apply_complex(n, p, q, phi, r, order=None):
    return beta_pq_convolve(n, p, q, inv_radial_complex(n, phi), r, order)
