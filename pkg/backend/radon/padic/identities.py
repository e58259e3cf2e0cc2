"""Both sides of the exact identities checked by the p-adic suite.

Every helper returns a (left, right) pair of exact values so that callers
decide how to report a mismatch.
"""
import logging
from fractions import Fraction

from .cells import make_cell_function
from .cyclotomic import to_value
from .fourier import (Character, fourier_F, fourier_F_as_function,
                      fourier_Fprime, fourier_Fprime_as_function)
from .funcspace import (LazyShellFunction, invariance_level, mult_convolve,
                        shell_table, sigma)
from .radon import (BetaDistribution, apply_A_beta, apply_A_beta_as_function,
                    nonzero_vector, radon_M, radon_M_as_function)
from .scalars import as_coordinates, power, valuation, vector_valuation

logger = logging.getLogger(__name__)


def _units(q, depth):
    """Representatives of O^x modulo pi^depth."""
    return (u for u in range(1, q ** depth) if u % q)


def keybeta_sides(h, n, conductor=None):
    """<beta, h> and <sigma(alpha) * psi, h> for alpha(t) = psi(-t) - 1.

    sigma(alpha)(t) = (psi(-1/t) - 1) |t|^(-n) vanishes unless v(t) >= 1,
    and the inner integral of psi(s/t) h(s) vanishes once v(t) exceeds the
    finest level of h, so only finitely many shells of t contribute.
    """
    q = h.q
    psi = Character(q) if conductor is None else Character(q, conductor)
    left = BetaDistribution(q, n).pair(h)
    centers = [cell.center[0] for cell in h.cells if cell.center[0]]
    lowest = min((valuation(c, q) for c in centers), default=0)
    top = max((cell.level for cell in h.cells), default=0)
    right = Fraction(0)
    for j in range(1, top + 1):
        depth = max(1, j, j - lowest)
        weight = power(q, n * j - depth)
        for u in _units(q, depth):
            t = power(q, j) * u
            outer = psi(-1 / t) - 1
            if not outer:
                continue
            inner = Fraction(0)
            for cell, coeff in h.terms:
                if j <= cell.level:
                    inner = inner + coeff * psi(cell.center[0] / t) \
                        * power(q, -cell.level)
            right = right + weight * outer * inner
    return left, to_value(right)


def m_star_sides(alpha, f, xi):
    """M(sigma(alpha) * f)(xi) and (alpha * Mf)(xi)."""
    left = radon_M(mult_convolve(sigma(alpha, f.n), f), xi)
    right = mult_convolve(alpha, radon_M_as_function(f))(xi)
    return left, right


def a_star_sides(alpha, f, x):
    """A_beta(alpha * phi)(x) and (sigma(alpha) * A_beta phi)(x), phi = f."""
    phi = LazyShellFunction.from_cell_function(f)
    left = apply_A_beta(mult_convolve(alpha, phi), x)
    right = mult_convolve(
        sigma(alpha, f.n), apply_A_beta_as_function(phi)
    )(x)
    return left, right


def fprime_r_sides(f, xi, conductor=None):
    """F'f(xi) and (alpha * Mf)(xi) with alpha(t) = psi(-t) - 1.

    alpha vanishes on O, and Mf(xi/t) vanishes unless v(t) >= v(xi) + R, so
    the shells v(xi) + R .. -1 carry the whole convolution.
    """
    q = f.q
    psi = Character(q) if conductor is None else Character(q, conductor)
    left = fourier_Fprime(f, xi, conductor)
    if f.is_zero:
        return left, Fraction(0)
    xi, v = nonzero_vector(xi, q)
    r = invariance_level(f).level
    right = Fraction(0)
    for j in range(v + f.shells[0], 0):
        depth = max(-j, r, 1)
        for u in _units(q, depth):
            t = power(q, j) * u
            outer = psi(-t) - 1
            if not outer:
                continue
            value = radon_M(f, tuple(c / t for c in xi))
            if value:
                right = right + outer * value * power(q, -depth)
    return left, to_value(right)


def transpose(matrix):
    return tuple(zip(*matrix))


def equivariance_sides(f, matrix, shift, xi):
    """M(g.f)(xi) and |det g| Mf(g^T xi) for g = pi^shift * matrix."""
    xi = as_coordinates(xi)
    scale = power(f.q, shift)
    image = tuple(
        scale * sum((Fraction(a) * c for a, c in zip(row, xi)), Fraction(0))
        for row in transpose(matrix)
    )
    left = radon_M(f.transform(matrix, shift), xi)
    right = power(f.q, -shift * f.n) * radon_M(f, image)
    return left, to_value(right)


def round_trip_sides(f, x, level=None, anchor=None):
    """A_beta(Mf)(x) and f(x)."""
    return (
        apply_A_beta(radon_M_as_function(f), x, level=level, anchor=anchor),
        f(x),
    )


def m_after_a_sides(f, xi):
    """M(A_beta phi)(xi) and phi(xi) for phi = Mf.

    A_beta phi is tabulated on the shells between its lower bound and the
    top shell of f, where it is known to be supported.
    """
    phi = radon_M_as_function(f)
    image = apply_A_beta_as_function(phi)
    table = image.to_cell_function(image.support_floor, f.shells[1])
    return radon_M(table, xi), phi(xi)


def fourier_round_trip_sides(f, x, conductor=None):
    """F(F'f)(x) and f(x)."""
    phi = fourier_Fprime_as_function(f, conductor)
    return fourier_F(phi, x, conductor=conductor), f(x)


def fourier_reverse_sides(f, xi, conductor=None):
    """F'(F phi)(xi) and phi(xi) for phi = f in C_c.

    f is split into its parts f_s on the shells v = s.  F f_s is constant
    on cosets of pi^(-s) O^n and supported in pi^(-M) O^n, M the finest
    level of f_s, while F' only sees the shells of x below -v(xi); each
    part is tabulated on those shells alone.
    """
    xi, v = nonzero_vector(xi, f.q)
    total = Fraction(0)
    for s, part in shell_parts(f):
        image = fourier_F_as_function(
            LazyShellFunction.from_cell_function(part), conductor
        )
        table = shell_table(image, -s, -part.max_level, -v)
        total = total + fourier_Fprime(table, xi, conductor)
    return to_value(total), f(xi)


def shell_parts(f):
    """(s, f restricted to the shell v = s) for every shell met by f."""
    parts = {}
    for cell, coeff in f.terms:
        parts.setdefault(cell.shell, []).append((cell, coeff))
    for s in sorted(parts):
        cells, coeffs = zip(*parts[s])
        yield s, make_cell_function(cells, coeffs, q=f.q, n=f.n)


def invariance_pairs(f, r):
    """(x, x') pairs with v(x' - x) >= v(x) + r, one family per cell."""
    q = f.q
    for cell in f.cells:
        x = cell.center
        v = vector_valuation(x, q)
        for k in range(f.n):
            moved = list(x)
            moved[k] = moved[k] + power(q, v + r)
            yield x, tuple(moved)
