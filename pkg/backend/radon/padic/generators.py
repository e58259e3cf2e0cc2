"""Seeded random inputs for the p-adic identities."""
from fractions import Fraction

import numpy as np

from .cells import Cell, make_cell_function
from .funcspace import MultKernel
from .scalars import power

COEFFICIENTS = tuple(
    Fraction(c) for c in ('-2', '-1', '1', '2', '1/2', '3', '-1/3')
)
SHELLS = (-2, 2)
MAX_RELATIVE_LEVEL = 2
ZERO_BALL_LEVEL = 3


def make_rng(seed):
    return np.random.default_rng(seed)


def _digits(rng, q, depth, n):
    while True:
        digits = [int(d) for d in rng.integers(0, q ** depth, size=n)]
        if any(d % q for d in digits):
            return digits


def random_cell(rng, q, n, shells=SHELLS, max_relative=MAX_RELATIVE_LEVEL):
    v = int(rng.integers(shells[0], shells[1] + 1))
    depth = int(rng.integers(1, max_relative + 1))
    scale = power(q, v)
    digits = _digits(rng, q, depth, n)
    return Cell(q, v + depth, tuple(scale * d for d in digits))


def _disjoint_cells(rng, q, n, count, shells, max_relative):
    cells = []
    attempts = 0
    while len(cells) < count and attempts < 20 * count:
        attempts += 1
        candidate = random_cell(rng, q, n, shells, max_relative)
        if all(candidate.relation(cell) == 'disjoint' for cell in cells):
            cells.append(candidate)
    return cells


def _coefficients(rng, count):
    picks = rng.integers(0, len(COEFFICIENTS), size=count)
    return [COEFFICIENTS[int(i)] for i in picks]


def random_cc_function(rng, q, n, max_cells=8, shells=SHELLS,
                       max_relative=MAX_RELATIVE_LEVEL):
    count = int(rng.integers(1, max_cells + 1))
    cells = _disjoint_cells(rng, q, n, count, shells, max_relative)
    return make_cell_function(cells, _coefficients(rng, len(cells)), q=q, n=n)


def random_schwartz_function(rng, q, n, max_cells=8, shells=SHELLS,
                             max_relative=MAX_RELATIVE_LEVEL):
    """A C_c function plus a multiple of the ball pi^3 O^n around 0."""
    f = random_cc_function(rng, q, n, max_cells, shells, max_relative)
    zero = Cell(q, max(ZERO_BALL_LEVEL, shells[1] + 1), (0,) * n)
    return make_cell_function(
        f.cells + (zero,),
        f.coeffs + tuple(_coefficients(rng, 1)),
        require_cc=False,
        q=q,
        n=n,
    )


def random_kernel(rng, q, max_cells=3, shells=(-1, 1)):
    cells = _disjoint_cells(
        rng, q, 1, int(rng.integers(1, max_cells + 1)), shells, 2
    )
    return MultKernel(
        make_cell_function(cells, _coefficients(rng, len(cells)), q=q, n=1)
    )


def random_transform(rng, q, n, shifts=(-1, 1)):
    """(matrix, shift) with an integral matrix whose determinant is a unit."""
    while True:
        matrix = rng.integers(0, q, size=(n, n))
        if round(np.linalg.det(matrix)) % q:
            break
    shift = int(rng.integers(shifts[0], shifts[1] + 1))
    return tuple(tuple(int(a) for a in row) for row in matrix), shift


def random_point(rng, q, n, shells=SHELLS, depth=3):
    v = int(rng.integers(shells[0], shells[1] + 1))
    scale = power(q, v)
    return tuple(scale * d for d in _digits(rng, q, depth, n))


def random_test_function(rng, q, max_cells=4, shells=SHELLS):
    """A Schwartz-Bruhat function on F for pairings with distributions."""
    return random_schwartz_function(rng, q, 1, max_cells, shells)
