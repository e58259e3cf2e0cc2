import json
import math

import numpy as np
from django.test import SimpleTestCase

from geometry.exceptions import GeometryError
from geometry.support import (BumpDescriptor, support_function,
                              zero_component_check)


class BumpDescriptorTest(SimpleTestCase):

    def test_annulus_values(self):
        bump = BumpDescriptor.annulus(1.0, 2.0)
        self.assertEqual(float(bump((0.5, 0.0))), 0.0)
        self.assertAlmostEqual(float(bump((0.0, 1.5))), math.exp(-1))

    def test_line_misses_support(self):
        bump = BumpDescriptor.annulus(1.0, 2.0)
        xi = np.array([[0.0, 0.0], [0.3, 0.0], [0.0, 0.45], [0.6, 0.0]])
        values = bump.line_transform(xi)
        np.testing.assert_array_equal(values[:3], 0)
        self.assertGreater(values[3], 0)

    def test_radial_symmetry(self):
        bump = BumpDescriptor.annulus(0.8, 1.6)
        angles = np.linspace(0, 2 * math.pi, 7)
        xi = 0.9 * np.stack([np.cos(angles), np.sin(angles)], axis=-1)
        values = bump.line_transform(xi)
        np.testing.assert_allclose(values, values[0], rtol=1e-10)

    def test_point_bump(self):
        bump = BumpDescriptor.point((1.0, 0.5), 0.25)
        values = bump.line_transform(np.array([[0.8, 0.4], [-1.0, 0.0]]))
        self.assertGreater(values[0], 0)
        self.assertEqual(values[1], 0)

    def test_hull_support(self):
        bump = BumpDescriptor.point((1.0, 0.0), 0.5)
        h = support_function(bump.hull_points(), np.array([1.0, 0.0]))
        self.assertAlmostEqual(float(h), 1 + 0.5 / math.cos(math.pi / 180))

    def test_empty_set(self):
        with self.assertRaises(GeometryError):
            support_function(np.zeros((0, 2)), (1.0, 0.0))


class ZeroComponentTest(SimpleTestCase):

    def test_annulus(self):
        h = 1 / 50
        report = zero_component_check(
            BumpDescriptor.annulus(1.0, 2.0), h, extent=1.0
        )
        self.assertLessEqual(report.hausdorff, 3 * h)
        radii = np.linalg.norm(report.dual_polygon, axis=-1)
        np.testing.assert_allclose(radii, 0.5, rtol=1e-3)
        component = np.linalg.norm(report.component_polygon, axis=-1)
        self.assertLessEqual(component.max(), 0.5 + 3 * h)

    def test_off_axis_point(self):
        h = 1 / 40
        report = zero_component_check(
            BumpDescriptor.point((1.0, 0.5), 0.25), h, extent=1.5
        )
        self.assertIsNone(report.dual_polygon)
        self.assertLessEqual(report.hausdorff, 3 * h)

    def test_refinement(self):
        bump = BumpDescriptor.annulus(1.0, 1.5)
        coarse = zero_component_check(bump, 1 / 20, extent=1.0)
        fine = zero_component_check(bump, 1 / 60, extent=1.0)
        self.assertLessEqual(fine.hausdorff, coarse.hausdorff + 1 / 60)
        self.assertLessEqual(fine.hausdorff, 3 / 60)

    def test_report_keys(self):
        report = zero_component_check(
            BumpDescriptor.annulus(1.0, 2.0), 1 / 20, extent=1.0
        )
        data = json.loads(json.dumps(report.as_dict()))
        self.assertEqual(
            set(data),
            {'component_polygon', 'dual_polygon', 'hausdorff', 'grid_h',
             'threshold'},
        )
        self.assertEqual(data['grid_h'], 1 / 20)
