from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from padic.exceptions import (IndeterminateValuationError, PAdicError,
                              PrecisionError)
from padic.scalars import (PAdicScalar, PAdicVector, check_prime,
                           reduce_mod, valuation, vnorm)

nonzero_fractions = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=1000
).filter(bool)


class VnormTest(SimpleTestCase):

    def test_minimum_of_coordinate_valuations(self):
        self.assertEqual(vnorm(PAdicVector(3, (9, 3))), 1)
        self.assertEqual(vnorm(PAdicVector(2, (1, 0))), 0)
        self.assertEqual(vnorm(PAdicVector(2, (Fraction(1, 2), 4))), -1)

    def test_norm_is_power_of_q(self):
        self.assertEqual(PAdicVector(3, (9, 3)).norm, Fraction(1, 3))

    def test_zero_vector(self):
        with self.assertRaises(IndeterminateValuationError):
            vnorm(PAdicVector(5, (0, 0)))

    def test_vector_needs_two_coordinates(self):
        with self.assertRaises(PAdicError):
            PAdicVector(2, (1,))


class ScalarTest(SimpleTestCase):

    def test_residue_field_must_be_prime(self):
        with self.assertRaises(PAdicError):
            check_prime(4)
        with self.assertRaises(PAdicError):
            PAdicScalar(6, 1)

    def test_digit_string(self):
        scalar = PAdicScalar(3, 15)
        self.assertEqual(scalar.valuation, 1)
        self.assertEqual(scalar.to_digit_string(), '1:21')
        self.assertEqual(PAdicScalar.from_digit_string(3, '1:21').value, 15)
        self.assertEqual(PAdicScalar(2, 0).to_digit_string(), '0:0')

    def test_negative_valuation_digits(self):
        scalar = PAdicScalar.from_digit_string(2, '-2:11')
        self.assertEqual(scalar.value, Fraction(3, 4))
        self.assertEqual(scalar.norm, 4)

    def test_digit_string_wider_than_window(self):
        scalar = PAdicScalar.from_digit_string(2, '0:1111', precision=3)
        self.assertEqual(scalar.value, 15)
        self.assertEqual(scalar.precision, 4)
        self.assertEqual(scalar.to_digit_string(), '0:1111')

    def test_window_must_be_positive(self):
        with self.assertRaises(PrecisionError):
            PAdicScalar(2, 1, precision=0)

    def test_leading_digit_must_be_nonzero(self):
        with self.assertRaises(PAdicError):
            PAdicScalar.from_digit_string(3, '0:01')

    def test_inverse_of_zero(self):
        with self.assertRaises(IndeterminateValuationError):
            PAdicScalar(5, 0).inverse()

    def test_reduce_mod_keeps_low_digits(self):
        self.assertEqual(reduce_mod(7, 2, 2), 3)
        self.assertEqual(reduce_mod(Fraction(9, 2), 2, 1), Fraction(1, 2))
        self.assertEqual(reduce_mod(8, 2, 3), 0)
        self.assertEqual(reduce_mod(-1, 3, 2), 8)

    @settings(deadline=None)
    @given(nonzero_fractions, nonzero_fractions, st.sampled_from((2, 3, 5)))
    def test_multiplication_round_trip(self, x, y, q):
        a, b = PAdicScalar(q, x), PAdicScalar(q, y)
        self.assertEqual(((a * b) / b).value, x)
        self.assertEqual((a * b).valuation, a.valuation + b.valuation)

    @settings(deadline=None)
    @given(nonzero_fractions, st.sampled_from((2, 3, 5)),
           st.integers(min_value=-3, max_value=6))
    def test_reduction_stays_in_ball(self, x, q, level):
        reduced = reduce_mod(x, q, level)
        difference = x - reduced
        self.assertTrue(not difference or valuation(difference, q) >= level)
        self.assertEqual(reduce_mod(reduced, q, level), reduced)
