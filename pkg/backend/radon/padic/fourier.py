import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .cells import CYCLOTOMIC
from .cyclotomic import CyclotomicNumber, to_value
from .exceptions import InsufficientConductorError
from .funcspace import LazyShellFunction, invariance_level
from .radon import lower_bound_after, nonzero_vector, stabilized_integral
from .scalars import default_precision, dot, power, reduce_mod, valuation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Character:
    """psi(s) = exp(2 pi i {s}) with {s} the q-adic fractional part.

    psi is trivial on O and not on pi^(-1) O.  Values are roots of unity of
    order q^K where K = -v({s}); ``conductor`` caps K.
    """

    q: int
    conductor: int = field(default_factory=default_precision)

    def __call__(self, s):
        fractional = reduce_mod(s, self.q, 0)
        if not fractional:
            return CyclotomicNumber.root(self.q, 0, 0)
        level = -valuation(fractional, self.q)
        if level > self.conductor:
            raise InsufficientConductorError(
                f'Для ψ({s}) нужен проводник q^{level}, '
                f'а доступен q^{self.conductor}'
            )
        exponent = fractional * self.q ** level
        return CyclotomicNumber.root(self.q, level, int(exponent))


def character_support_index(q, r, conductor=None):
    """i such that the U-average of psi is supported in pi^i O, U = 1 + pi^r O.

    The average of psi(s u) over u in U equals psi(s) times the mean of psi
    over s pi^r O, so shells are tried downward from 0 until that mean
    (a full character sum) vanishes.
    """
    psi = Character(q) if conductor is None else Character(q, conductor)
    index = 0
    while True:
        candidate = index - 1
        span = candidate + r
        if span >= 0:
            index = candidate
            continue
        total = sum(
            (psi(power(q, span) * d) for d in range(q ** -span)),
            Fraction(0),
        )
        if not total:
            return index
        index = candidate


@dataclass(frozen=True)
class CharacterKernel:
    """psi viewed as a distribution on F, the kernel of F = A_psi."""

    q: int
    conductor: int = field(default_factory=default_precision)

    @property
    def character(self):
        return Character(self.q, self.conductor)

    def support_index(self, r):
        return character_support_index(self.q, r, self.conductor)

    def pair_ball(self, center, level):
        if level < 0:
            return Fraction(0)
        return self.character(center) * power(self.q, -level)


def fourier_Fprime(f, xi, conductor=None):
    """F'f(xi) = integral of f(x) (psi(-xi . x) - 1) dx."""
    xi, v = nonzero_vector(xi, f.q)
    psi = Character(f.q) if conductor is None else Character(f.q, conductor)
    n = f.n
    total = Fraction(0)
    for cell, coeff in f.terms:
        measure = power(f.q, -cell.level * n)
        if v + cell.level >= 0:
            term = psi(-dot(xi, cell.center)) - 1
        else:
            term = Fraction(-1)
        total = total + coeff * measure * term
    return to_value(total)


def fourier_Fprime_as_function(f, conductor=None):
    """F'f as an element of C_{<=-R-1} for f supported in v >= R."""
    bound = -f.shells[0] - 1 if not f.is_zero else 0
    return LazyShellFunction(
        f.q,
        f.n,
        lambda xi: fourier_Fprime(f, xi, conductor),
        invariance_level(f),
        support_bound=bound,
        value_ring=CYCLOTOMIC,
    )


def _kernel(q, conductor):
    return CharacterKernel(q) if conductor is None else CharacterKernel(
        q, conductor
    )


def fourier_F(phi, x, level=None, anchor=None, conductor=None):
    return stabilized_integral(
        phi, x, _kernel(phi.q, conductor), level=level, anchor=anchor
    )


def fourier_F_as_function(phi, conductor=None):
    kernel = _kernel(phi.q, conductor)
    return LazyShellFunction(
        phi.q,
        phi.n,
        lambda x: fourier_F(phi, x, conductor=conductor),
        phi.invariance,
        support_floor=lower_bound_after(phi, kernel),
        value_ring=CYCLOTOMIC,
    )
