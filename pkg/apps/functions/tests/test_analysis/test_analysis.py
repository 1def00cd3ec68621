import numpy as np

from apps.algebra.services.character_service import CharacterService
from apps.core.exceptions import AnalysisAssertionFailure, InputError
from apps.core.models import FUNCTION, SpectrumSet
from apps.functions.demo.factory.function_factory import FunctionFactory
from apps.functions.demo.factory.space_factory import FiniteMetricFactory
from apps.functions.models import FiniteMetric
from apps.functions.services.analysis_service import AnalysisService
from apps.functions.services.function_service import FunctionService
from apps.functions.services.lipschitz_service import LipschitzService
from apps.functions.services.vv_spectrum_service import VectorSpectrumService
from apps.functions.tests.test_vvfa.base_test_case import FunctionsBaseTestCase


class EquicontinuityTest(FunctionsBaseTestCase):
    def test_modulus_is_the_largest_constant(self):
        metric = FiniteMetric(self.pq, np.array([[0, 2], [2, 0]], dtype=float))
        f = FunctionFactory(algebra=self.c2, rows={"p": [0, 0], "q": [2, 4]})
        g = FunctionFactory(algebra=self.c2, rows={"p": [1, 1], "q": [1, 2]})

        self.assertAlmostEqual(AnalysisService.equicontinuity_modulus([f, g], metric), 2.0)

    def test_random_family(self):
        metric = FiniteMetricFactory(size=4, seed=5)
        family = [FunctionFactory(algebra=self.z4, space=metric.space, rng=self.rng) for _ in range(5)]

        omega = AnalysisService.equicontinuity_modulus(family, metric)
        self.assertAlmostEqual(omega, max(LipschitzService.lip_constant(f, metric) for f in family))

    def test_empty_family(self):
        with self.assertRaises(InputError):
            AnalysisService.equicontinuity_modulus([], FiniteMetricFactory(size=2))


class UscExperimentTest(FunctionsBaseTestCase):
    def test_single_point(self):
        f = FunctionFactory(algebra=self.c2, rows={"p": [1, 2]})
        report = AnalysisService.usc_experiment(self.c2, f, n_steps=10, decay=0.5, seed=0)

        self.assertTrue(report.payload["pass"])
        self.assertEqual(len(report.payload["delta"]), 10)
        self.assertAlmostEqual(report.payload["delta"][0], 0.5)
        self.assertLessEqual(report.payload["fitted_C"], 1.0 + 1e-9)
        self.assertEqual(len(report.payload["chains"]), 2)

    def test_distances_shrink_with_delta(self):
        f = self.random_function(self.z4, 3)
        report = AnalysisService.usc_experiment(self.z4, f, n_steps=8, decay=0.5, seed=4)

        for delta, dist in zip(report.payload["delta"], report.payload["dist"]):
            self.assertLessEqual(dist, 10 * delta)
        self.assertLessEqual(report.residuals["chain_distance"], 10 * report.payload["delta"][-1] + 1e-7)

    def test_dual_along_the_radical(self):
        f = self.random_function(self.dual, 2)
        report = AnalysisService.usc_experiment(
            self.dual, f, n_steps=5, seed=1, directions=[self.dual.element([0, 1])]
        )

        self.assertTrue(all(dist <= 1e-12 for dist in report.payload["dist"]))

    def test_slow_decay(self):
        report = AnalysisService.usc_experiment(self.c2, self.f_c2, n_steps=5, decay=0.99, seed=3)

        self.assertTrue(report.payload["pass"])
        self.assertAlmostEqual(report.payload["delta"][-1], 0.99**5)
        self.assertLessEqual(report.payload["fitted_C"], 1.0 + 1e-9)

    def test_zero_decay(self):
        f = self.random_function(self.split, 2)
        report = AnalysisService.usc_experiment(self.split, f, n_steps=3, decay=0.0)

        self.assertEqual(report.payload["dist"], [0.0, 0.0, 0.0])
        self.assertEqual(report.payload["fitted_C"], 0.0)

    def test_invalid_parameters(self):
        f = self.random_function(self.split, 2)
        with self.assertRaises(InputError):
            AnalysisService.usc_experiment(self.split, f, decay=1.0)
        with self.assertRaises(InputError):
            AnalysisService.usc_experiment(self.split, f, n_steps=0)
        with self.assertRaises(InputError):
            AnalysisService.usc_experiment(self.c2, f)

    def test_deterministic(self):
        f = self.random_function(self.z4, 2)
        first = AnalysisService.usc_experiment(self.z4, f, seed=9)
        second = AnalysisService.usc_experiment(self.z4, f, seed=9)

        self.assertEqual(first.payload, second.payload)


class ChainTest(FunctionsBaseTestCase):
    def setUp(self):
        super().setUp()
        self.f = FunctionFactory(algebra=self.c2, rows={"p": [1, 2]})
        self.base = VectorSpectrumService.vv_spectrum_chars(self.f, self.chars_c2)

    def test_terminal_values_near_the_spectrum(self):
        spectra = [
            SpectrumSet.from_points([[1.01], [2.01]], 1e-7, FUNCTION),
            SpectrumSet.from_points([[1.001], [2.0005]], 1e-7, FUNCTION),
        ]
        chains = AnalysisService.check_chains(self.f, self.base, spectra, [0.1, 0.01])

        self.assertEqual(len(chains), 2)
        self.assertTrue(all(chain["member"] for chain in chains))
        self.assertComplexClose([chain["limit"][0] for chain in chains], [1, 2])
        self.assertAlmostEqual(chains[0]["distance"], 0.001)

    def test_terminal_value_is_judged_by_ideal_membership(self):
        # the character image wrongly lists 5 as a member of SP(f)
        corrupted = SpectrumSet.from_points([[1.0], [5.0]], 1e-7, FUNCTION)
        spectra = [SpectrumSet.from_points([[5.0]], 1e-7, FUNCTION)]

        with self.assertRaises(AnalysisAssertionFailure) as context:
            AnalysisService.check_chains(self.f, corrupted, spectra, [1e-3])

        self.assertFalse(context.exception.payload["in_ideal_spectrum"])
        self.assertEqual(context.exception.payload["distance"], 0.0)

    def test_terminal_value_too_far_from_the_spectrum(self):
        spectra = [SpectrumSet.from_points([[1.5]], 1e-7, FUNCTION)]

        with self.assertRaises(AnalysisAssertionFailure) as context:
            AnalysisService.check_chains(self.f, self.base, spectra, [0.5**10])

        self.assertAlmostEqual(context.exception.payload["distance"], 0.5)


class CompactnessTest(FunctionsBaseTestCase):
    def test_report(self):
        f = self.random_function(self.z4, 3)
        chars = CharacterService.characters(self.z4)
        report = AnalysisService.compactness_report(f, chars)

        self.assertEqual(report.payload["size"], 4)
        self.assertEqual(report.payload["characters"], 4)
        self.assertTrue(report.payload["closed"])
        self.assertLessEqual(report.payload["max_sup_norm"], FunctionService.uniform_norm(f) + 1e-12)
        self.assertEqual(report.residuals["bound_excess"], 0.0)


class NeighbourhoodTest(FunctionsBaseTestCase):
    def certified(self, f, lam, chars):
        return VectorSpectrumService.certificate(f, lam, chars)

    def test_closedness_margin(self):
        lam = self.lam(self.pq, [0, 0])
        certificate = self.certified(self.f_c2, lam, self.chars_c2)
        margin = AnalysisService.closedness_margin(self.f_c2, lam, certificate, self.chars_c2)

        self.assertGreaterEqual(margin["margin"] + 1e-12, margin["bound"])
        self.assertAlmostEqual(margin["bound"], 1 / certificate.norm_sum)

    def test_perturbation_protection(self):
        chars = CharacterService.characters(self.split)
        for _ in range(3):
            f = self.random_function(self.split, 3)
            lam = self.lam(f.space, self.rng.standard_normal(3))
            certificate = self.certified(f, lam, chars)

            result = AnalysisService.perturbation_protection(f, lam, certificate, chars, trials=100, seed=2)
            self.assertEqual(result["protected"], 100)
            self.assertAlmostEqual(result["epsilon"], 1 / (2 * certificate.norm_sum))

    def test_false_certificate_is_caught(self):
        lam = self.lam(self.pq, [0, 0])
        certificate = self.certified(self.f_c2, lam, self.chars_c2)
        # pretend the certificate protects a far larger neighbourhood
        inflated = type(certificate)(certificate.points, certificate.coefficients, 0.0, certificate.norm_sum / 1e3)

        with self.assertRaises(AnalysisAssertionFailure):
            AnalysisService.closedness_margin(self.f_c2, lam, inflated, self.chars_c2)
