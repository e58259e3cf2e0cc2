from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from padic.cells import Cell, make_cell_function
from padic.exceptions import PAdicError
from padic.funcspace import (InvarianceCertificate, LazyShellFunction,
                             MultKernel, invariance_level, kernel_convolve,
                             mult_convolve, shell_cells, shell_table, sigma)
from padic.generators import make_rng, random_cc_function, random_kernel

from .fixtures import sphere, zero_function

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)
primes = st.sampled_from((2, 3, 5))


class InvarianceTest(SimpleTestCase):

    def test_unit_sphere(self):
        self.assertEqual(invariance_level(sphere(3, 2)).level, 1)
        self.assertEqual(invariance_level(sphere(3, 2, 2)).level, 1)

    def test_two_shells(self):
        cells = list(shell_cells(2, 2, 0, 1)) + list(shell_cells(2, 2, 1, 1))
        f = make_cell_function(cells, [1] * len(cells))
        self.assertEqual(invariance_level(f).level, 1)

    def test_single_small_cell(self):
        f = make_cell_function([Cell(2, 3, (1, 0))], [1])
        self.assertEqual(invariance_level(f).level, 3)

    def test_negative_level(self):
        with self.assertRaises(PAdicError):
            InvarianceCertificate(-1)

    def test_shell_cell_count(self):
        self.assertEqual(len(list(shell_cells(3, 2, 0, 1))), 8)
        self.assertEqual(len(list(shell_cells(3, 2, -1, 2))), 72)
        self.assertEqual(len(list(shell_cells(2, 3, 4, 1))), 7)


class LazyShellFunctionTest(SimpleTestCase):

    def test_bounds_follow_support(self):
        phi = LazyShellFunction.from_cell_function(sphere(3, 2))
        self.assertEqual((phi.support_floor, phi.support_bound), (0, 0))
        self.assertEqual(phi((1, 2)), 1)
        self.assertEqual(phi((3, 0)), 0)
        self.assertEqual(phi((Fraction(1, 3), 0)), 0)

    def test_undefined_at_zero(self):
        phi = LazyShellFunction.from_cell_function(sphere(3, 2))
        with self.assertRaises(PAdicError):
            phi((0, 0))

    def test_tabulation_returns_the_function(self):
        phi = LazyShellFunction.from_cell_function(sphere(3, 2))
        self.assertEqual(phi.to_cell_function(-1, 1), sphere(3, 2))

    def test_shell_table(self):
        phi = LazyShellFunction.from_cell_function(sphere(3, 2))
        table = shell_table(phi, 1, 0)
        self.assertTrue(table.contains_zero)
        self.assertEqual(table.terms, sphere(3, 2).terms)

    def test_shell_table_stops_below_high(self):
        phi = LazyShellFunction.from_cell_function(sphere(3, 2))
        self.assertTrue(shell_table(phi, 1, -1, 0).is_zero)
        self.assertEqual(shell_table(phi, 1, -1, 1).terms, sphere(3, 2).terms)


class MultConvolveTest(SimpleTestCase):

    def test_units_average(self):
        f = sphere(3, 2)
        result = mult_convolve(MultKernel.shell_indicator(3, 0), f)
        self.assertEqual(result.coarsen(), f.scale(Fraction(2, 3)))

    def test_shifted_units(self):
        f = sphere(3, 2)
        result = mult_convolve(MultKernel.shell_indicator(3, 1), f)
        self.assertEqual(
            result.coarsen(), f.dilate(3).scale(Fraction(2, 3)).coarsen()
        )

    def test_zero_kernel(self):
        kernel = MultKernel(zero_function(3, 1))
        self.assertTrue(mult_convolve(kernel, sphere(3, 2)).is_zero)

    def test_kernel_must_avoid_zero(self):
        with self.assertRaises(PAdicError):
            MultKernel(make_cell_function(
                [Cell(3, 1, (0,))], [1], require_cc=False
            ))

    def test_lazy_bounds(self):
        phi = LazyShellFunction.from_cell_function(sphere(3, 2))
        lazy = mult_convolve(MultKernel.shell_indicator(3, 1), phi)
        self.assertEqual((lazy.support_floor, lazy.support_bound), (1, 1))
        self.assertEqual(lazy((3, 0)), Fraction(2, 3))
        self.assertEqual(lazy((1, 0)), 0)

    @settings(deadline=None, max_examples=15)
    @given(seeds, primes)
    def test_lazy_agrees_with_cells(self, seed, q):
        rng = make_rng(seed)
        f = random_cc_function(rng, q, 2, max_cells=3, shells=(0, 1))
        alpha = random_kernel(rng, q)
        exact = mult_convolve(alpha, f)
        lazy = mult_convolve(
            alpha, LazyShellFunction.from_cell_function(f)
        )
        for cell in exact.cells:
            self.assertEqual(lazy(cell.center), exact(cell.center))

    @settings(deadline=None, max_examples=15)
    @given(seeds, primes)
    def test_associativity(self, seed, q):
        rng = make_rng(seed)
        f = random_cc_function(rng, q, 2, max_cells=2, shells=(0, 0))
        first, second = random_kernel(rng, q), random_kernel(rng, q)
        left = mult_convolve(kernel_convolve(first, second), f)
        right = mult_convolve(first, mult_convolve(second, f))
        self.assertEqual(left.coarsen(), right.coarsen())

    @settings(deadline=None, max_examples=15)
    @given(seeds, primes)
    def test_kernels_commute(self, seed, q):
        rng = make_rng(seed)
        first, second = random_kernel(rng, q), random_kernel(rng, q)
        self.assertEqual(
            kernel_convolve(first, second).function.coarsen(),
            kernel_convolve(second, first).function.coarsen(),
        )


class SigmaTest(SimpleTestCase):

    def test_shifted_units(self):
        alpha = MultKernel.shell_indicator(3, 1)
        expected = MultKernel.from_shells(3, {-1: Fraction(1, 9)})
        self.assertEqual(sigma(alpha, 2).function, expected.function)

    def test_units_are_fixed(self):
        alpha = MultKernel.shell_indicator(5, 0)
        self.assertEqual(sigma(alpha, 3).function, alpha.function)

    @settings(deadline=None, max_examples=30)
    @given(seeds, primes, st.integers(min_value=1, max_value=4))
    def test_involution(self, seed, q, n):
        alpha = random_kernel(make_rng(seed), q)
        self.assertEqual(sigma(sigma(alpha, n), n).function, alpha.function)
