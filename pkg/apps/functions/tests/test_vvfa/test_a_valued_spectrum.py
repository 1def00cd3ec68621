from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.services.character_service import CharacterService
from apps.core.exceptions import SemisimplicityRequired
from apps.functions.demo.factory.function_factory import FunctionFactory
from apps.functions.services.a_character_service import ACharacterService
from apps.functions.tests.test_vvfa.base_test_case import FunctionsBaseTestCase


class AValuedSpectrumTest(FunctionsBaseTestCase):
    def test_example(self):
        result = ACharacterService.a_valued_spectrum(self.f_c2, self.chars_c2)

        self.assertSameSet(result.spectrum, [[1, 2], [3, 4]])
        self.assertEqual(result.spectrum.kind, "element")
        self.assertEqual(set(result.lifted.labels), {"p", "q"})

    def test_equals_the_image(self):
        for algebra in (self.split, self.z4):
            chars = CharacterService.characters(algebra)
            f = self.random_function(algebra, 3)
            result = ACharacterService.a_valued_spectrum(f, chars)

            self.assertLessEqual(result.spectrum.hausdorff(result.image), 1e-7)
            self.assertLessEqual(result.residuals["image_in_lifted"], 1e-7)
            self.assertLessEqual(result.residuals["spectrum_in_lifted"], 1e-7)

    def test_repeated_values_are_deduplicated(self):
        f = FunctionFactory(algebra=self.c2, rows={"p": [1, 2], "q": [1, 2], "r": [0, 5]})
        result = ACharacterService.a_valued_spectrum(f, self.chars_c2)

        self.assertEqual(len(result.spectrum), 2)
        self.assertEqual(len(result.image), 2)

    def test_distance_is_the_algebra_norm(self):
        result = ACharacterService.a_valued_spectrum(self.f_c2, self.chars_c2)

        self.assertAlmostEqual(
            result.spectrum.distance_to([1, 2.5]),
            AlgebraService.coeffs_norm(self.c2, [0, 0.5]),
        )

    def test_dual_is_refused(self):
        with self.assertRaises(SemisimplicityRequired):
            ACharacterService.a_valued_spectrum(
                self.random_function(self.dual, 2), CharacterService.characters(self.dual)
            )
