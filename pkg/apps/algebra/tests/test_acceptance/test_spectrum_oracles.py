import numpy as np

from apps.algebra.demo.factory.algebra_factory import AlgebraFactory
from apps.algebra.demo.factory.algebra_factory_settings import (
    ELEMENTS_PER_ALGEBRA,
    MAX_TUPLE_LENGTH,
    RANDOM_ALGEBRAS_COUNT,
)
from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.services.gallery_service import GalleryService
from apps.algebra.services.spectrum_service import SpectrumService
from apps.algebra.tests.test_algebra.base_test_case import AlgebraBaseTestCase


class SpectrumOraclesTest(AlgebraBaseTestCase):
    """Character images against eigenvalues and ideal membership on seeded families."""

    def test_character_image_equals_eigenvalues(self):
        worst = 0.0
        for algebra in AlgebraFactory.family(RANDOM_ALGEBRAS_COUNT, seed=1):
            chars = self.characters(algebra)
            self.assertEqual(len(chars), algebra.dim, algebra.algebra_id)

            for _ in range(ELEMENTS_PER_ALGEBRA):
                result = SpectrumService.spectrum(self.random_element(algebra), chars)
                worst = max(worst, result.spectrum.hausdorff(result.eigenvalues))

        self.assertLessEqual(worst, 1e-7)

    def test_single_element_joint_spectrum_on_gallery(self):
        for name in GalleryService.names():
            algebra = GalleryService.gallery(name)
            chars = self.characters(algebra)
            for _ in range(3):
                a = self.random_element(algebra)
                joint = SpectrumService.joint_spectrum(algebra, [a], chars).spectrum
                scalar = SpectrumService.spectrum(a, chars).spectrum

                self.assertEqual(joint.scalars(), scalar.scalars(), name)

    def test_joint_spectrum_oracles_agree(self):
        algebras = AlgebraFactory.family(25, seed=4)
        algebras += [GalleryService.gallery(name) for name in GalleryService.names()]

        instances = 0
        while instances < 100:
            algebra = algebras[instances % len(algebras)]
            length = 1 + instances % MAX_TUPLE_LENGTH
            elements = [self.random_element(algebra) for _ in range(length)]

            # raises OracleDisagreement on any disagreement
            result = SpectrumService.joint_spectrum(
                algebra, elements, self.characters(algebra), seed=instances, samples=8
            )
            self.assertEqual(result.spectrum.width, length)
            instances += 1

    def test_dual_is_local(self):
        chars = self.characters(self.dual)
        self.assertEqual(len(chars), 1)
        self.assertFalse(AlgebraService.is_semisimple(self.dual))

        for _ in range(10):
            a = self.random_element(self.dual)
            result = SpectrumService.spectrum(a, chars)

            self.assertEqual(len(result.spectrum), 1)
            self.assertComplexClose(result.spectrum.scalars(), [a.coeffs[0]])

    def test_repeated_runs_are_identical(self):
        algebra = AlgebraFactory(dim=5, seed=8)
        first = self.characters(algebra, seed=3).matrix
        second = self.characters(algebra, seed=3).matrix

        np.testing.assert_array_equal(first, second)
