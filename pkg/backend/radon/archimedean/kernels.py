"""Convolution kernels on R_{>0} shared by the real and complex calculus.

An alpha kernel is a measure

    mass * t^power * zonal(t) * (1 - t^2)^exponent dt   on (0, 1),

a beta kernel a distribution supported on (0, 1] that pairs with a test
function h through a differential operator moved onto h:

    <beta, h> = constant * int_0^1 t^power (1 - t^2)^exponent (L h)(t) dt,

or constant * (L h)(1) for the delta kernels.  L maps t^s to
symbol(s) * t^(s + shift).  Convolutions follow the multiplicative group
convention (k * g)(r) = <k(t), g(r / t)>.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, JetOrderError
from .jets import Jet
from .specfun import (default_order, finite_part_integral, gauss_jacobi,
                      graded_rule)
from .testfns import Dilated, PowerFunction, RadialFunction

logger = logging.getLogger(__name__)


def _positive(points):
    points = np.asarray(points, dtype=float)
    if np.any(points <= 0):
        raise DomainError('Свертка определена только при r > 0')
    return points


def _collapse(values):
    values = np.asarray(values)
    return values.item() if values.ndim == 0 else values


class AlphaKernel:
    mass = 1.0
    power = 0
    exponent = 0.0

    def zonal(self, t):
        raise NotImplementedError

    def mellin_formula(self, s):
        raise NotImplementedError

    def smooth_density(self, t):
        """The density without the (1 - t)^exponent endpoint factor."""
        return (
            self.mass * t ** self.power * self.zonal(t)
            * (1 + t) ** self.exponent
        )

    def density(self, t):
        return self.smooth_density(t) * (1 - t) ** self.exponent

    def mellin_quadrature(self, s, order=None):
        """int_0^1 t^s d(alpha), the t^(s + power) factor kept in the weight.

        Complex s contributes the oscillating factor t^(i Im s) to the
        integrand.
        """
        s = complex(s)
        b = s.real + self.power
        if b <= -1:
            raise DomainError(
                f'Квадратура Меллина требует Re(s) > {-1 - self.power}, '
                f'получено s = {s}'
            )
        rule = gauss_jacobi(order or default_order(), self.exponent, b)
        nodes, weights = rule.mapped(0.0, 1.0)
        integrand = (
            self.mass * self.zonal(nodes) * (1 + nodes) ** self.exponent
        )
        if s.imag:
            integrand = integrand * nodes ** (1j * s.imag)
            return complex(np.sum(weights * integrand))
        return float(np.sum(weights * integrand))

    def _nodes(self, lo, hi, order):
        # graded panels; Jacobi weight where the window reaches t = 1
        lo, hi = np.asarray(lo)[..., None], np.asarray(hi)
        edge_x, edge_w = graded_rule(order, self.exponent)
        inner_x, inner_w = graded_rule(order)
        edge_span = 1 - lo
        inner_span = hi[..., None] - lo
        edge_nodes = lo + edge_span * edge_x
        inner_nodes = lo + inner_span * inner_x
        with np.errstate(divide='ignore', invalid='ignore'):
            edge_weights = (
                edge_span ** (self.exponent + 1) * edge_w
                * self.smooth_density(edge_nodes)
            )
            inner_weights = (
                inner_span * inner_w * self.density(inner_nodes)
            )
        at_edge = (hi >= 1)[..., None]
        return (
            np.where(at_edge, edge_nodes, inner_nodes),
            np.where(at_edge, edge_weights, inner_weights),
        )

    def image_jet(self, function, points, order, quadrature_order=None):
        """Jets of (alpha * u)(rho) = int u(rho / t) d(alpha)(t).

        The j-th Taylor coefficient in rho is int t^(-j) u_j(rho / t),
        u_j being the Taylor coefficients of u.
        """
        if math.isinf(function.upper):
            raise DomainError(
                'Свертка с alpha требует функцию с ограниченным носителем'
            )
        rho = _positive(points)
        lo = rho / function.upper
        if function.lower > 0:
            hi = np.asarray(np.minimum(1.0, rho / function.lower))
        else:
            hi = np.ones_like(rho)
        lo = np.minimum(lo, hi)
        nodes, weights = self._nodes(
            lo, hi, quadrature_order or default_order()
        )
        values = function.jet(rho[..., None] / nodes, order).coefficients
        powers = np.arange(order + 1).reshape((-1,) + (1,) * nodes.ndim)
        return Jet(np.sum(values * nodes ** -powers * weights, axis=-1))

    def convolve(self, function, points, quadrature_order=None):
        if isinstance(function, PowerFunction):
            e = function.exponent
            radii = _positive(points)
            return _collapse(radii ** e * self.mellin_formula(-e))
        return _collapse(
            self.image_jet(function, points, 0, quadrature_order).value
        )


@dataclass(frozen=True)
class AlphaImage(RadialFunction):
    """rho -> (alpha * u)(rho), with jets."""

    kernel: AlphaKernel
    function: RadialFunction
    quadrature_order: int = None

    lower = 0.0

    @property
    def upper(self):
        return self.function.upper

    @property
    def breakpoints(self):
        return self.function.breakpoints

    def jet(self, points, order):
        return self.kernel.image_jet(
            self.function, points, order, self.quadrature_order
        )


@dataclass(frozen=True)
class MellinComparison:
    s: complex
    quadrature: complex
    formula: complex

    @property
    def abs_error(self):
        if self.quadrature is None:
            return None
        return abs(self.quadrature - self.formula)

    @property
    def rel_error(self):
        """Relative error; the absolute one where the formula vanishes."""
        error = self.abs_error
        if error is None or self.formula == 0:
            return error
        return error / abs(self.formula)

    def agrees(self, rtol):
        return self.rel_error is None or self.rel_error <= rtol


def compare_mellin(kernel, s, order=None):
    formula = kernel.mellin_formula(s)
    try:
        quadrature = kernel.mellin_quadrature(s, order)
    except DomainError:
        quadrature = None
    return MellinComparison(s, quadrature, formula)


class BetaKernel:
    constant = 1.0
    power = 0
    exponent = 0.0
    derivatives = 0
    shift = 0
    delta = False

    def operate(self, jet, points):
        """Values of L h at ``points`` given jets of h there."""
        raise NotImplementedError

    def symbol(self, s):
        raise NotImplementedError

    def _require(self, jet_order):
        if jet_order is not None and jet_order < self.derivatives:
            raise JetOrderError(
                f'Для спаривания с beta нужна струя порядка '
                f'{self.derivatives}, доступен порядок {jet_order}'
            )

    def pair_power(self, s, order=None):
        """<beta, t^s>, continued analytically in s."""
        mu = self.symbol(s)
        if self.delta:
            return self.constant * mu
        fp = finite_part_integral(
            s + self.shift + self.power, self.exponent, order
        )
        return self.constant * mu * fp

    def pair(self, function, order=None):
        if isinstance(function, PowerFunction):
            return self.pair_power(function.exponent, order)
        self._require(function.max_order)
        if self.delta:
            at_one = function.jet(1.0, self.derivatives)
            return self.constant * float(self.operate(at_one, 1.0))
        lower = function.lower
        upper = min(1.0, function.upper)
        if lower >= upper:
            return 0.0
        if lower <= 0:
            raise DomainError(
                'Спаривание с beta требует функцию, обращающуюся в нуль '
                'около t = 0'
            )
        order = order or default_order()
        cuts = sorted(
            b for b in function.breakpoints if lower < b < upper
        )
        edges = [lower, *cuts, upper]
        total = 0.0
        for a, b in zip(edges[:-1], edges[1:]):
            total += self._pair_panel(function, a, b, order)
        return self.constant * total

    def _pair_panel(self, function, a, b, order):
        span = b - a
        if b >= 1:
            x, w = graded_rule(order, self.exponent)
            nodes = a + span * x
            weights = span ** (self.exponent + 1) * w * (
                (1 + nodes) ** self.exponent
            )
        else:
            x, w = graded_rule(order)
            nodes = a + span * x
            weights = span * w * (1 - nodes * nodes) ** self.exponent
        values = self.operate(function.jet(nodes, self.derivatives), nodes)
        return float(np.sum(weights * nodes ** self.power * values))

    def convolve(self, function, points, order=None):
        radii = _positive(points)
        if isinstance(function, PowerFunction):
            e = function.exponent
            return _collapse(radii ** e * self.pair_power(-e, order))
        logger.debug(
            'Свертка с beta в %d точках, порядок %d',
            radii.size, self.derivatives,
        )
        values = [
            self.pair(Dilated(function, float(r)), order)
            for r in radii.ravel()
        ]
        return _collapse(np.reshape(values, radii.shape))
