import math

import numpy as np

from .exceptions import JetOrderError


class Jet:
    """Truncated Taylor expansion sum_j c_j (t - t0)^j.

    ``coefficients`` has shape (order + 1, *points): every arithmetic
    operation acts on all base points at once.  Results are truncated to
    the smaller order of the operands.
    """

    __array_ufunc__ = None

    def __init__(self, coefficients):
        self.coefficients = np.asarray(coefficients, dtype=float)

    @property
    def order(self):
        return len(self.coefficients) - 1

    @property
    def value(self):
        return self.coefficients[0]

    @classmethod
    def constant(cls, value, order):
        value = np.asarray(value, dtype=float)
        coefficients = np.zeros((order + 1,) + value.shape)
        coefficients[0] = value
        return cls(coefficients)

    @classmethod
    def variable(cls, point, order):
        point = np.asarray(point, dtype=float)
        coefficients = np.zeros((order + 1,) + point.shape)
        coefficients[0] = point
        if order:
            coefficients[1] = 1
        return cls(coefficients)

    @classmethod
    def zero(cls, shape, order):
        return cls(np.zeros((order + 1,) + tuple(shape)))

    def _coerce(self, other):
        if isinstance(other, Jet):
            return other
        other = np.asarray(other, dtype=float)
        shape = np.broadcast_shapes(other.shape, self.value.shape)
        return Jet.constant(np.broadcast_to(other, shape), self.order)

    def truncate(self, order):
        if order > self.order:
            raise JetOrderError(
                f'Нужна струя порядка {order}, доступен порядок {self.order}'
            )
        return Jet(self.coefficients[:order + 1])

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return Jet(
            self.coefficients[:order + 1] + other.coefficients[:order + 1]
        )

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.coefficients)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.coefficients * np.asarray(other, dtype=float))
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        shape = np.broadcast_shapes(a.shape[1:], b.shape[1:])
        result = np.zeros((order + 1,) + shape)
        for j in range(order + 1):
            for i in range(j + 1):
                result[j] = result[j] + a[i] * b[j - i]
        return Jet(result)

    __rmul__ = __mul__

    def reciprocal(self):
        f = self.coefficients
        g = np.zeros_like(f)
        g[0] = 1 / f[0]
        for k in range(1, self.order + 1):
            total = sum(f[j] * g[k - j] for j in range(1, k + 1))
            g[k] = -total * g[0]
        return Jet(g)

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.coefficients / np.asarray(other, dtype=float))
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def exp(self):
        f = self.coefficients
        g = np.zeros_like(f)
        g[0] = np.exp(f[0])
        for k in range(1, self.order + 1):
            g[k] = sum(j * f[j] * g[k - j] for j in range(1, k + 1)) / k
        return Jet(g)

    def power(self, alpha):
        """self ** alpha for a jet with nonzero value."""
        f = self.coefficients
        g = np.zeros_like(f)
        g[0] = f[0] ** alpha
        for k in range(1, self.order + 1):
            total = sum(
                (alpha * j - k + j) * f[j] * g[k - j] for j in range(1, k + 1)
            )
            g[k] = total / (k * f[0])
        return Jet(g)

    def compose(self, inner):
        """The jet of self(inner(t)); self is expanded at inner.value."""
        order = min(self.order, inner.order)
        shift = inner.truncate(order) - inner.value
        result = Jet.constant(self.coefficients[order], order)
        for i in range(order - 1, -1, -1):
            result = result * shift + self.coefficients[i]
        return result

    def differentiate(self):
        if not self.order:
            raise JetOrderError('Струя нулевого порядка не дифференцируется')
        factors = np.arange(1, self.order + 1).reshape(
            (-1,) + (1,) * (self.coefficients.ndim - 1)
        )
        return Jet(self.coefficients[1:] * factors)

    def derivative(self, k):
        """The k-th derivative at the base points."""
        if k > self.order:
            raise JetOrderError(
                f'Нужна производная порядка {k}, доступен порядок {self.order}'
            )
        return math.factorial(k) * self.coefficients[k]

    def __repr__(self):
        return f'Jet(order={self.order}, shape={self.value.shape})'
