from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from geometry.exceptions import DegeneratePolygonError, UnboundedDualError
from geometry.polygons import (ConvexPolygon, random_extension,
                               random_polygon, regular_polygon)
from geometry.support import support_function

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)

SQUARE = ConvexPolygon([(-1, -1), (1, -1), (1, 1), (-1, 1)])
CROSS = ConvexPolygon([(1, 0), (0, 1), (-1, 0), (0, -1)])


class ConvexPolygonTest(SimpleTestCase):

    def test_canonical_rotation(self):
        rotated = ConvexPolygon([(1, 1), (-1, 1), (-1, -1), (1, -1)])
        self.assertEqual(rotated, SQUARE)
        self.assertEqual(SQUARE.vertices[0], (-1, -1))

    def test_clockwise_rejected(self):
        with self.assertRaises(DegeneratePolygonError):
            ConvexPolygon([(-1, -1), (-1, 1), (1, 1), (1, -1)])

    def test_collinear_rejected(self):
        with self.assertRaises(DegeneratePolygonError):
            ConvexPolygon.from_points([(0, 0), (1, 1), (2, 2)])
        with self.assertRaises(DegeneratePolygonError):
            ConvexPolygon([(0, 0), (1, 0)])

    def test_from_points(self):
        points = [(0, 0), (2, 0), (1, 1), (2, 2), (0, 2), (1, 0)]
        hull = ConvexPolygon.from_points(points)
        self.assertEqual(len(hull), 4)
        self.assertIn((Fraction(2), Fraction(2)), hull.vertices)

    def test_contains(self):
        self.assertTrue(SQUARE.contains((Fraction(1, 2), 0)))
        self.assertFalse(SQUARE.contains((1, 0)))
        self.assertTrue(SQUARE.contains((1, 0), strict=False))
        self.assertTrue(SQUARE.contains_origin)


class PolarDualTest(SimpleTestCase):

    def test_square(self):
        self.assertEqual(SQUARE.polar_dual(), CROSS)
        self.assertEqual(CROSS.polar_dual(), SQUARE)

    def test_triangle(self):
        triangle = ConvexPolygon([(1, 0), (0, 1), (-1, -1)])
        dual = triangle.polar_dual()
        expected = ConvexPolygon([(1, 1), (-2, 1), (1, -2)])
        self.assertEqual(dual, expected)
        self.assertEqual(dual.polar_dual(), triangle)

    def test_origin_outside(self):
        shifted = ConvexPolygon([(1, 1), (2, 1), (2, 2), (1, 2)])
        with self.assertRaises(UnboundedDualError):
            shifted.polar_dual()

    def test_regular_polygon(self):
        hexagon = regular_polygon(6)
        dual = hexagon.polar_dual()
        self.assertEqual(len(dual), 6)
        self.assertEqual(dual.polar_dual(), hexagon)

    @settings(deadline=None, max_examples=20)
    @given(seeds)
    def test_involution(self, seed):
        polygon = random_polygon(np.random.default_rng(seed))
        self.assertEqual(polygon.polar_dual().polar_dual(), polygon)

    @settings(deadline=None, max_examples=20)
    @given(seeds)
    def test_monotone(self, seed):
        rng = np.random.default_rng(seed)
        inner = random_polygon(rng)
        outer = random_extension(rng, inner)
        for vertex in inner.vertices:
            self.assertTrue(outer.contains(vertex, strict=False))
        inner_dual = inner.polar_dual()
        for vertex in outer.polar_dual().vertices:
            self.assertTrue(inner_dual.contains(vertex, strict=False))

    def test_dual_boundary_is_unit_level(self):
        dual = SQUARE.polar_dual()
        for vertex in dual.vertices:
            self.assertEqual(SQUARE.support(vertex), 1)


class SupportFunctionTest(SimpleTestCase):

    def test_origin_only(self):
        self.assertEqual(support_function([(0, 0)], (3.0, -2.0)), 0)

    def test_square_corner(self):
        self.assertEqual(support_function(SQUARE.as_array(), (1, 1)), 2)

    def test_homogeneity(self):
        points = np.array([[0.3, 1.2], [-0.7, 0.1], [1.5, -0.4]])
        xi = np.array([0.4, -1.1])
        self.assertAlmostEqual(
            support_function(points, 2.5 * xi),
            2.5 * support_function(points, xi),
        )

    def test_grid(self):
        grid = np.zeros((3, 4, 2))
        grid[..., 0] = 1.0
        values = support_function(SQUARE.as_array(), grid)
        self.assertEqual(values.shape, (3, 4))
        np.testing.assert_allclose(values, 1.0)
