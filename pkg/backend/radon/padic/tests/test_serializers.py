from fractions import Fraction

from django.conf import settings
from django.test import SimpleTestCase, override_settings

from padic.cells import CYCLOTOMIC, Cell, make_cell_function
from padic.cyclotomic import CyclotomicNumber
from padic.serializers import (CellFunctionSerializer, format_coefficient,
                               parse_coefficient)

from .fixtures import sphere


class CoefficientTest(SimpleTestCase):

    def test_rational(self):
        self.assertEqual(format_coefficient(Fraction(-3, 4)), '-3/4')
        self.assertEqual(format_coefficient(Fraction(2)), '2/1')
        self.assertEqual(parse_coefficient('-3/4', 2), Fraction(-3, 4))

    def test_cyclotomic(self):
        value = CyclotomicNumber.root(3, 1) + Fraction(1, 2)
        text = format_coefficient(value)
        self.assertIn('|', text)
        self.assertEqual(parse_coefficient(text, 3), value)


class CellFunctionSerializerTest(SimpleTestCase):

    def payload(self, **overrides):
        data = {
            'q': 3,
            'n': 2,
            'value_ring': 'rational',
            'cells': [
                {'center': ['0:1', '0:0'], 'level': 1, 'coeff': '1/2'},
                {'center': ['1:1', '0:2'], 'level': 2, 'coeff': '-1'},
            ],
        }
        data.update(overrides)
        return data

    def test_valid_payload(self):
        serializer = CellFunctionSerializer(data=self.payload())
        self.assertTrue(serializer.is_valid(), serializer.errors)
        f = serializer.save()
        self.assertEqual(f((1, 0)), Fraction(1, 2))
        self.assertEqual(f((3, 2)), -1)
        self.assertIn(Cell(3, 2, (3, 2)), f.cells)

    def test_representation(self):
        data = CellFunctionSerializer(sphere(2, 2)).data
        self.assertEqual(data['q'], 2)
        self.assertEqual(len(data['cells']), 3)
        self.assertEqual(data['cells'][0]['coeff'], '1/1')
        self.assertNotIn('contains_zero', data)

    def test_composite_residue_field(self):
        serializer = CellFunctionSerializer(data=self.payload(q=4))
        self.assertFalse(serializer.is_valid())
        self.assertIn('q', serializer.errors)

    def test_overlapping_cells(self):
        cells = [
            {'center': ['0:1', '0:0'], 'level': 1, 'coeff': '1'},
            {'center': ['0:1', '0:0'], 'level': 2, 'coeff': '1'},
        ]
        serializer = CellFunctionSerializer(data=self.payload(cells=cells))
        self.assertFalse(serializer.is_valid())

    def test_zero_needs_flag(self):
        cells = [{'center': ['0:0', '0:0'], 'level': 1, 'coeff': '1'}]
        serializer = CellFunctionSerializer(data=self.payload(cells=cells))
        self.assertFalse(serializer.is_valid())
        serializer = CellFunctionSerializer(
            data=self.payload(cells=cells, contains_zero=True)
        )
        self.assertTrue(serializer.is_valid(), serializer.errors)

    def test_wrong_dimension(self):
        cells = [{'center': ['0:1'], 'level': 1, 'coeff': '1'}]
        serializer = CellFunctionSerializer(data=self.payload(cells=cells))
        self.assertFalse(serializer.is_valid())

    def test_cyclotomic_coefficients_need_ring(self):
        value = format_coefficient(CyclotomicNumber.root(3, 1))
        cells = [{'center': ['0:1', '0:0'], 'level': 1, 'coeff': value}]
        serializer = CellFunctionSerializer(data=self.payload(cells=cells))
        self.assertFalse(serializer.is_valid())
        serializer = CellFunctionSerializer(
            data=self.payload(cells=cells, value_ring=CYCLOTOMIC)
        )
        self.assertTrue(serializer.is_valid(), serializer.errors)

    def test_fine_cells_survive_a_round_trip(self):
        f = make_cell_function([Cell(2, 9, (Fraction(255, 2), 1))], [3])
        with override_settings(RADON=dict(settings.RADON, PRECISION=4)):
            data = CellFunctionSerializer(f).data
            self.assertEqual(data['cells'][0]['center'][0], '-1:11111111')
            serializer = CellFunctionSerializer(data=data)
            self.assertTrue(serializer.is_valid(), serializer.errors)
            self.assertEqual(serializer.save(), f)
