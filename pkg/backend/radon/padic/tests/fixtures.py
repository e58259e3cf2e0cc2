from fractions import Fraction

from padic.cells import Cell, make_cell_function
from padic.funcspace import shell_cells


def sphere(q, n, level=1):
    """The indicator of ||x|| = 1 as cells of the given level."""
    cells = list(shell_cells(q, n, 0, level))
    return make_cell_function(cells, [1] * len(cells))


def ball(q, n, level, center=None, coeff=1):
    center = (0,) * n if center is None else center
    return make_cell_function(
        [Cell(q, level, center)], [Fraction(coeff)], require_cc=False
    )


def zero_function(q, n):
    return make_cell_function([], [], q=q, n=n)
