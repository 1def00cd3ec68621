import numpy as np

from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.services.character_service import CharacterService
from apps.algebra.tests.test_algebra.base_test_case import AlgebraBaseTestCase
from apps.core.exceptions import AlgebraMismatch


class GelfandTransformTest(AlgebraBaseTestCase):
    def test_pointwise_transform_is_the_coefficients(self):
        chars = self.characters(self.c2)

        # characters are ordered (0, 1), (1, 0)
        self.assertComplexClose(CharacterService.gelfand_transform(self.c2.element([3, 7]), chars), [7, 3])

    def test_transform_is_a_homomorphism(self):
        chars = self.characters(self.z4)
        a = self.random_element(self.z4)
        b = self.random_element(self.z4)

        product = CharacterService.gelfand_transform(AlgebraService.mul(a, b), chars)
        self.assertComplexClose(
            product,
            CharacterService.gelfand_transform(a, chars) * CharacterService.gelfand_transform(b, chars),
        )
        self.assertComplexClose(CharacterService.gelfand_transform(self.z4.one(), chars), np.ones(4))

    def test_transform_is_bounded_by_the_norm(self):
        chars = self.characters(self.random)
        for _ in range(10):
            a = self.random_element(self.random)
            sup = np.max(np.abs(CharacterService.gelfand_transform(a, chars)))

            self.assertLessEqual(sup, AlgebraService.norm(a) + 1e-9)

    def test_radical_is_in_the_kernel(self):
        chars = self.characters(self.dual)

        self.assertComplexClose(CharacterService.gelfand_transform(self.dual.element([0, 5]), chars), [0])

    def test_mismatched_algebra(self):
        with self.assertRaises(AlgebraMismatch):
            CharacterService.gelfand_transform(self.split.one(), self.characters(self.c2))
