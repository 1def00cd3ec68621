import numpy as np

from apps.algebra.demo.factory.algebra_factory import AlgebraFactory
from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.services.character_service import CharacterService
from apps.algebra.tests.test_algebra.base_test_case import AlgebraBaseTestCase
from apps.core.models import TUPLE, SpectrumSet


class CharactersTest(AlgebraBaseTestCase):
    def test_pointwise(self):
        chars = self.characters(self.c2)

        self.assertEqual(len(chars), 2)
        # lexicographic order of the value vectors
        self.assertComplexClose(chars.matrix, [[0, 1], [1, 0]])
        self.assertEqual(chars.algebra_id, "C2")

    def test_dual_has_one_character(self):
        chars = self.characters(self.dual)

        self.assertEqual(len(chars), 1)
        self.assertComplexClose(chars[0].values, [1, 0])

    def test_split(self):
        chars = self.characters(self.split)

        self.assertComplexClose(chars.matrix, [[1, -1], [1, 1]])

    def test_cyclic_group(self):
        chars = self.characters(self.z4)
        expected = [[1j ** (j * k) for j in range(4)] for k in range(4)]

        self.assertEqual(len(chars), 4)
        self.assertSameSet(SpectrumSet.from_points(chars.matrix, 1e-7, TUPLE), expected)

    def test_random_semisimple_rows(self):
        algebra = AlgebraFactory(dim=5, seed=3)
        chars = self.characters(algebra)

        self.assertEqual(len(chars), 5)
        for character in chars:
            self.assertLessEqual(character.residual, 1e-9)
            self.assertLessEqual(CharacterService.residual(algebra, character.values), 1e-9)
            self.assertAlmostEqual(character(algebra.one()), 1.0)

    def test_characters_are_multiplicative(self):
        chars = self.characters(self.random)
        a = self.random_element(self.random)
        b = self.random_element(self.random)

        product = AlgebraService.mul(a, b)
        for character in chars:
            self.assertAlmostEqual(character(product), character(a) * character(b), delta=1e-9)

    def test_seed_independence(self):
        first = self.characters(self.z4, seed=1)
        second = self.characters(self.z4, seed=99)

        self.assertComplexClose(first.matrix, second.matrix)

    def test_separate_points(self):
        self.assertTrue(CharacterService.characters_separate_points(self.characters(self.c3)))
        self.assertFalse(CharacterService.characters_separate_points(self.characters(self.dual)))

    def test_refine_polishes_a_rough_guess(self):
        values, residual = CharacterService.refine(self.split, np.array([1.01, 0.98], dtype=complex))

        self.assertLessEqual(residual, 1e-12)
        self.assertComplexClose(values, [1, 1])

    def test_corrupt_characters(self):
        chars = self.characters(self.c2)
        corrupted = CharacterService.corrupt_characters(chars)

        self.assertComplexClose(corrupted.matrix, chars.matrix * (1 + 0.5j))

