"""Radial test functions on R_{>0} and the harmonics they are paired with.

Every radial function reports its support [lower, upper] and evaluates
jets at arrays of points; values are the order-0 jets.
"""
import math
from dataclasses import dataclass

import numpy as np

from .jets import Jet


class RadialFunction:
    lower = 0.0
    upper = math.inf
    max_order = None
    # points of (lower, upper) where the function is not analytic
    breakpoints = ()

    def jet(self, points, order):
        raise NotImplementedError

    def __call__(self, points):
        return self.jet(points, 0).value


def _reciprocal(x):
    if x == 0:
        return math.inf
    if math.isinf(x):
        return 0.0
    return 1 / x


@dataclass(frozen=True)
class BumpFunction(RadialFunction):
    """P(y) exp(-1 / (1 - y^2)) with y the affine image of [lower, upper]."""

    lower: float
    upper: float
    polynomial: tuple = (1.0,)

    @property
    def center(self):
        return (self.lower + self.upper) / 2

    @property
    def scale(self):
        return 2 / (self.upper - self.lower)

    @property
    def breakpoints(self):
        return (self.lower, self.upper)

    def jet(self, points, order):
        points = np.asarray(points, dtype=float)
        inside = np.abs(points - self.center) * self.scale < 1
        s = Jet.variable(np.where(inside, points, self.center), order)
        y = (s - self.center) * self.scale
        bump = (-(1 - y * y).reciprocal()).exp()
        poly = Jet.constant(
            np.full(points.shape, self.polynomial[-1]), order
        )
        for coeff in reversed(self.polynomial[:-1]):
            poly = poly * y + coeff
        return Jet((poly * bump).coefficients * inside)

    def sup_norm(self, samples=2001):
        grid = np.linspace(self.lower, self.upper, samples)
        return float(np.abs(self(grid)).max())


@dataclass(frozen=True)
class PowerFunction(RadialFunction):
    """t -> t^exponent, the homogeneous test function of Mellin pairings."""

    exponent: float

    def jet(self, points, order):
        return Jet.variable(points, order).power(self.exponent)


@dataclass(frozen=True)
class InvertedRadial(RadialFunction):
    """Radial part of Inv: r -> r^(-weight) phi(1/r).

    ``conjugate`` records that the harmonic factor is read at the complex
    conjugate direction; the radial part does not depend on it.
    """

    function: RadialFunction
    weight: int
    conjugate: bool = False

    @property
    def lower(self):
        return _reciprocal(self.function.upper)

    @property
    def upper(self):
        return _reciprocal(self.function.lower)

    @property
    def breakpoints(self):
        return tuple(_reciprocal(b) for b in self.function.breakpoints)

    @property
    def max_order(self):
        return self.function.max_order

    def jet(self, points, order):
        r = Jet.variable(points, order)
        inner = r.reciprocal()
        outer = self.function.jet(inner.value, order)
        return outer.compose(inner) * r.power(-self.weight)


@dataclass(frozen=True)
class Dilated(RadialFunction):
    """t -> g(radius / t)."""

    function: RadialFunction
    radius: float

    @property
    def lower(self):
        return self.radius * _reciprocal(self.function.upper)

    @property
    def upper(self):
        return self.radius * _reciprocal(self.function.lower)

    @property
    def breakpoints(self):
        return tuple(
            self.radius * _reciprocal(b) for b in self.function.breakpoints
        )

    @property
    def max_order(self):
        return self.function.max_order

    def jet(self, points, order):
        inner = Jet.variable(points, order).reciprocal() * self.radius
        return self.function.jet(inner.value, order).compose(inner)


def random_bump(rng, degree=2):
    lower = float(rng.uniform(0.5, 1.5))
    width = float(rng.uniform(1.0, 2.0))
    polynomial = (1.0,) + tuple(
        float(c) for c in rng.uniform(-0.5, 0.5, size=degree)
    )
    return BumpFunction(lower, lower + width, polynomial)


@dataclass(frozen=True)
class SectoralHarmonic:
    """Y(x) = Re((x_1 + i x_2)^k), harmonic of degree k with Y(e_1) = 1."""

    k: int

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return np.real((x[..., 0] + 1j * x[..., 1]) ** self.k)


@dataclass(frozen=True)
class ComplexZonalHarmonic:
    """Y(z) = (z_1 + z_2)^p (conj z_1 - conj z_2)^q in H^{p,q}."""

    p: int
    q: int

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return (
            (z[..., 0] + z[..., 1]) ** self.p
            * (np.conj(z[..., 0]) - np.conj(z[..., 1])) ** self.q
        )
