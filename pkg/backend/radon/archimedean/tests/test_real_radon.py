import math

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from archimedean.exceptions import DomainError, JetOrderError, PoleError
from archimedean.kernels import AlphaImage, MellinComparison
from archimedean.real_radon import (AlphaKernelReal, BetaKernelReal,
                                    a_k_direct, a_k_eval, alpha_convolve,
                                    beta_convolve, beta_pair, inv_radial,
                                    m_radial, mellin_alpha, minv_apply,
                                    radon_direct, radon_isotypic)
from archimedean.specfun import graded_rule
from archimedean.testfns import (BumpFunction, PowerFunction,
                                 SectoralHarmonic, random_bump)

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)

T_GRID = np.linspace(-0.98, 0.98, 50)


def s_grid(n):
    return (n - 0.5, n, n + 0.5, n + 1, n + 2.5)


class ShortJets(BumpFunction):
    max_order = 1


class ZonalKernelTest(SimpleTestCase):

    def test_low_degrees(self):
        t = np.linspace(-0.9, 0.9, 7)
        for n in (2, 3, 4, 5):
            np.testing.assert_allclose(a_k_eval(n, 0, t), 1)
            np.testing.assert_allclose(a_k_eval(n, 1, t), t, atol=1e-15)
        self.assertAlmostEqual(float(a_k_eval(3, 2, 0.5)), -1 / 8)

    def test_direct_examples(self):
        self.assertAlmostEqual(
            float(a_k_direct(2, 3, 0.4)), math.cos(3 * math.acos(0.4))
        )
        self.assertAlmostEqual(
            float(a_k_direct(3, 2, 0.3, order=16)), (3 * 0.09 - 1) / 2
        )
        self.assertAlmostEqual(float(a_k_direct(4, 0, 0.7, order=8)), 1)

    def test_direct_oracle(self):
        for n in (2, 3):
            for k in range(9):
                np.testing.assert_allclose(
                    a_k_eval(n, k, T_GRID),
                    a_k_direct(n, k, T_GRID, order=32),
                    rtol=0, atol=1e-10,
                )

    def test_bounds(self):
        for n in (2, 3, 4):
            for k in range(9):
                values = a_k_eval(n, k, T_GRID)
                self.assertTrue(np.all(np.abs(values) <= 1 + 1e-12))
                self.assertAlmostEqual(float(a_k_eval(n, k, 1.0)), 1)

    def test_bad_degree(self):
        with self.assertRaises(DomainError):
            AlphaKernelReal(1, 0)
        with self.assertRaises(DomainError):
            a_k_eval(3, -1, 0.5)


class MellinRealTest(SimpleTestCase):

    def test_spot_values(self):
        for (n, k, s), expected in {
            (2, 0, 2): math.pi,
            (2, 1, 3): math.pi / 2,
            (3, 0, 3): 2 * math.pi,
        }.items():
            comparison = mellin_alpha(n, k, s)
            self.assertAlmostEqual(comparison.formula, expected, places=10)
            self.assertAlmostEqual(comparison.quadrature, expected, places=10)

    def test_agreement_grid(self):
        for n in (2, 3, 4):
            for k in range(7):
                for s in s_grid(n):
                    comparison = mellin_alpha(n, k, s)
                    self.assertTrue(
                        comparison.agrees(1e-8), (n, k, s, comparison)
                    )

    def test_complex_argument(self):
        comparison = mellin_alpha(2, 1, 3 + 0.5j)
        self.assertIsInstance(comparison.quadrature, complex)
        self.assertLess(comparison.rel_error, 1e-6)

    def test_outside_convergence(self):
        comparison = mellin_alpha(3, 1, 1.5)
        self.assertIsNone(comparison.quadrature)
        self.assertTrue(comparison.agrees(1e-8))
        with self.assertRaises(DomainError):
            AlphaKernelReal(3, 1).mellin_quadrature(2)

    def test_formula_pole(self):
        with self.assertRaises(PoleError):
            mellin_alpha(3, 0, 2)

    def test_vanishing_formula(self):
        comparison = mellin_alpha(2, 2, 2)
        self.assertEqual(comparison.formula, 0)
        self.assertEqual(comparison.rel_error, comparison.abs_error)
        self.assertLess(comparison.abs_error, 1e-10)

    def test_comparison_errors(self):
        comparison = MellinComparison(2, 1.5, 2.0)
        self.assertEqual(comparison.abs_error, 0.5)
        self.assertEqual(comparison.rel_error, 0.25)
        self.assertFalse(comparison.agrees(0.1))


class BetaRealTest(SimpleTestCase):

    def test_reciprocity(self):
        for n in (2, 3, 4):
            for k in range(7):
                for s in s_grid(n):
                    formula = mellin_alpha(n, k, s).formula
                    if formula == 0:
                        with self.assertRaises(PoleError):
                            beta_pair(n, k, PowerFunction(s))
                        continue
                    product = beta_pair(n, k, PowerFunction(s)) * formula
                    self.assertAlmostEqual(product, 1, delta=1e-6,
                                           msg=(n, k, s))

    def test_operator_on_powers(self):
        points = np.array([0.3, 0.7, 1.0])
        for n, k, s in ((2, 0, 2.5), (3, 2, 4.0), (4, 3, 5.5)):
            kernel = BetaKernelReal(n, k)
            jet = PowerFunction(s).jet(points, kernel.derivatives)
            np.testing.assert_allclose(
                kernel.operate(jet, points),
                kernel.symbol(s) * points ** (s + kernel.shift),
            )

    def test_inverse_of_pi(self):
        self.assertAlmostEqual(
            beta_pair(2, 0, PowerFunction(2)), 1 / math.pi, places=12
        )

    def test_vanishing_test_function(self):
        self.assertEqual(beta_pair(3, 1, BumpFunction(1.0, 2.0)), 0.0)

    def test_jet_order(self):
        with self.assertRaises(JetOrderError):
            beta_pair(2, 1, ShortJets(0.5, 2.0))

    def test_support_at_zero(self):
        image = AlphaImage(AlphaKernelReal(2, 0), BumpFunction(1.0, 2.0))
        with self.assertRaises(DomainError):
            beta_pair(2, 0, image)

    def test_power_eigenfunction(self):
        value = beta_convolve(3, 1, PowerFunction(-4.0), 2.0)
        expected = 2.0 ** -4 * beta_pair(3, 1, PowerFunction(4.0))
        self.assertAlmostEqual(value, expected, places=12)


class ConvolutionRealTest(SimpleTestCase):

    def test_beyond_support(self):
        u = BumpFunction(1.0, 2.0, (1.0, 0.4))
        self.assertEqual(alpha_convolve(3, 2, u, 2.0), 0.0)
        self.assertEqual(alpha_convolve(3, 2, u, 5.0), 0.0)
        self.assertEqual(beta_convolve(3, 2, u, 2.5), 0.0)

    def test_linearity(self):
        radii = np.array([0.4, 1.2, 1.7])
        left = alpha_convolve(2, 1, BumpFunction(1.0, 2.0, (1.0, 0.0)), radii)
        right = alpha_convolve(
            2, 1, BumpFunction(1.0, 2.0, (0.0, 1.0)), radii
        )
        both = alpha_convolve(2, 1, BumpFunction(1.0, 2.0, (1.0, 2.0)), radii)
        np.testing.assert_allclose(left + 2 * right, both, atol=1e-14)

    def test_nonpositive_radius(self):
        with self.assertRaises(DomainError):
            alpha_convolve(2, 0, BumpFunction(1.0, 2.0), 0.0)

    def test_support_filtration(self):
        u = BumpFunction(0.8, 1.6)
        phi = m_radial(3, 1, u)
        self.assertAlmostEqual(phi.lower, 1 / 1.6)
        self.assertEqual(phi(np.array([0.5, 0.6]))[0], 0.0)


class InvTest(SimpleTestCase):

    def test_involution(self):
        u = BumpFunction(0.9, 1.8, (1.0, 0.2))
        twice = inv_radial(3, inv_radial(3, u))
        points = np.linspace(0.8, 1.9, 12)
        np.testing.assert_allclose(twice(points), u(points), atol=1e-12)

    def test_power(self):
        g = inv_radial(3, PowerFunction(-4.5))
        self.assertEqual(g.function.exponent, -4.5)
        self.assertAlmostEqual(float(g(2.0)), 2.0 ** 1.5)

    def test_support_reflection(self):
        g = inv_radial(2, BumpFunction(0.5, 4.0))
        self.assertEqual((g.lower, g.upper), (0.25, 2.0))


class RoundTripRealTest(SimpleTestCase):

    def test_zero(self):
        zero = BumpFunction(1.0, 2.0, (0.0,))
        self.assertEqual(minv_apply(2, 1, m_radial(2, 1, zero), 1.5), 0.0)

    def test_vanishes_beyond_support(self):
        u = BumpFunction(1.0, 2.0)
        phi = m_radial(3, 0, u)
        self.assertEqual(minv_apply(3, 0, phi, 2.0), 0.0)
        self.assertEqual(minv_apply(3, 0, phi, 3.0), 0.0)

    def test_fixed_bump(self):
        u = BumpFunction(1.0, 2.0, (1.0, 0.3))
        radii = np.array([0.9, 1.2, 1.5, 1.8])
        for n, k in ((2, 0), (2, 3), (3, 1), (3, 4)):
            recovered = minv_apply(n, k, m_radial(n, k, u), radii)
            np.testing.assert_allclose(
                recovered, u(radii), rtol=0, atol=1e-6 * u.sup_norm(),
                err_msg=str((n, k)),
            )

    @settings(deadline=None, max_examples=5)
    @given(seeds, st.sampled_from((2, 3)), st.integers(0, 4))
    def test_random_bumps(self, seed, n, k):
        rng = np.random.default_rng(seed)
        u = random_bump(rng)
        radii = rng.uniform(0.9 * u.lower, 1.05 * u.upper, size=3)
        image = AlphaImage(AlphaKernelReal(n, k), u)
        recovered = beta_convolve(n, k, image, radii)
        np.testing.assert_allclose(
            recovered, u(radii), rtol=0, atol=1e-6 * u.sup_norm()
        )

    @settings(deadline=None, max_examples=6)
    @given(seeds, st.sampled_from((2, 3)), st.sampled_from((3, 4)))
    def test_near_support_edges(self, seed, n, k):
        rng = np.random.default_rng(seed)
        u = random_bump(rng)
        radii = np.concatenate([
            u.lower * rng.uniform(0.97, 1.03, size=3),
            u.upper * rng.uniform(0.97, 1.0, size=2),
        ])
        recovered = minv_apply(n, k, m_radial(n, k, u), radii)
        np.testing.assert_allclose(
            recovered, u(radii), rtol=0, atol=1e-6 * u.sup_norm()
        )

    def test_steep_edge_high_degree(self):
        u = BumpFunction(0.792, 2.3, (1.0, -0.4, 0.2))
        radii = np.array([0.8, 0.804, 0.81, 0.83])
        for n in (2, 3):
            recovered = minv_apply(n, 4, m_radial(n, 4, u), radii)
            np.testing.assert_allclose(
                recovered, u(radii), rtol=0, atol=1e-6 * u.sup_norm(),
                err_msg=str(n),
            )


class GradedRuleTest(SimpleTestCase):

    def test_polynomial_moments(self):
        x, w = graded_rule(200, 0.5)
        for m in range(6):
            exact = math.gamma(m + 1) * math.gamma(1.5) / math.gamma(m + 2.5)
            self.assertAlmostEqual(float(np.sum(w * x ** m)), exact, 12)

    def test_boundary_layer(self):
        # exp(-1 / x) / x^8 peaks at x = 1/6 and is flat at 0
        x, w = graded_rule(200)
        value = float(np.sum(w * np.exp(-1 / x) / x ** 8))
        exact = math.factorial(6) * math.exp(-1) * sum(
            1 / math.factorial(j) for j in range(7)
        )
        self.assertAlmostEqual(value / exact, 1.0, 10)


class RadonDirectTest(SimpleTestCase):

    @settings(deadline=None, max_examples=10)
    @given(seeds, st.sampled_from((2, 3)), st.integers(0, 4))
    def test_matches_alpha(self, seed, n, k):
        rng = np.random.default_rng(seed)
        u = random_bump(rng)
        omega = rng.normal(size=n)
        omega /= np.linalg.norm(omega)
        t = rng.uniform(0.2, u.upper) * rng.choice((-1, 1))
        direct = radon_direct(n, u, SectoralHarmonic(k), omega, t)
        via_alpha = radon_isotypic(n, k, u, omega, t)
        self.assertAlmostEqual(direct, via_alpha, delta=1e-8)

    def test_at_one(self):
        u = BumpFunction(0.5, 2.0, (1.0, -0.2))
        omega = np.array([0.6, 0.8])
        direct = radon_direct(2, u, SectoralHarmonic(2), omega, 1.0)
        radial = alpha_convolve(2, 2, u, 1.0)
        y = float(SectoralHarmonic(2)(omega))
        self.assertAlmostEqual(direct, y * radial, delta=1e-8)

    def test_parity(self):
        u = BumpFunction(0.5, 1.5)
        omega = np.array([0.0, 0.6, 0.8])
        for k in (1, 2, 3):
            harmonic = SectoralHarmonic(k)
            plus = radon_direct(3, u, harmonic, omega, 0.7)
            minus = radon_direct(3, u, harmonic, omega, -0.7)
            self.assertAlmostEqual(minus, (-1) ** k * plus, delta=1e-12)

    def test_beyond_support(self):
        u = BumpFunction(0.5, 1.5)
        self.assertEqual(
            radon_direct(2, u, SectoralHarmonic(1), (1.0, 0.0), 1.5), 0.0
        )

    def test_dimension(self):
        with self.assertRaises(DomainError):
            radon_direct(4, BumpFunction(0.5, 1.5), SectoralHarmonic(0),
                         (1.0, 0.0, 0.0, 0.0), 0.5)
