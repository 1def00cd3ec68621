import numpy as np

from apps.algebra.services.character_service import CharacterService
from apps.core.exceptions import NotAFunctionAlgebra
from apps.functions.demo.factory.function_factory import FunctionFactory
from apps.functions.services.a_character_service import ACharacterService
from apps.functions.services.function_service import FunctionService
from apps.functions.tests.test_vvfa.base_test_case import FunctionsBaseTestCase


class IsAdmissibleTest(FunctionsBaseTestCase):
    def basis_functions(self, algebra, space):
        return [
            FunctionService.from_coeffs(column, algebra, space)
            for column in np.eye(space.size * algebra.dim, dtype=complex)
        ]

    def test_full_function_algebra(self):
        result = ACharacterService.is_admissible(self.basis_functions(self.c2, self.pq), self.chars_c2)

        self.assertTrue(result.admissible)
        self.assertEqual(result.closure_dim, 4)
        self.assertLessEqual(result.residual, 1e-9)

    def test_scalar_functions_times_a(self):
        # C(X) A: the point idempotents times 1, with the constants added
        chars = CharacterService.characters(self.z4)
        generators = [
            FunctionService.embed_scalar(self.lam(self.pq, row), self.z4) for row in np.eye(2)
        ]
        result = ACharacterService.is_admissible(generators, chars)

        self.assertTrue(result.admissible)
        self.assertEqual(result.closure_dim, 8)

    def test_not_closed_under_characters(self):
        # g(p) = e2, g(q) = 0 with the constants spans {(a, b + c, a, b)}
        g = FunctionFactory(algebra=self.c2, rows={"p": [0, 1], "q": [0, 0]})
        result = ACharacterService.is_admissible([g], self.chars_c2)

        self.assertFalse(result.admissible)
        self.assertEqual(result.closure_dim, 3)
        self.assertGreater(result.residual, 1e-3)

    def test_missing_constants(self):
        g = FunctionFactory(algebra=self.c2, rows={"p": [1, 0], "q": [0, 0]})

        with self.assertRaises(NotAFunctionAlgebra) as context:
            ACharacterService.is_admissible([g], self.chars_c2, include_constants=False)

        self.assertEqual(context.exception.condition, "constants")

    def test_constants_do_not_separate_points(self):
        constant = FunctionService.constant(self.c2.element([1, 2]), self.pq)

        with self.assertRaises(NotAFunctionAlgebra) as context:
            ACharacterService.is_admissible([constant], self.chars_c2)

        self.assertEqual(context.exception.condition, "separates points")

    def test_no_generators(self):
        with self.assertRaises(NotAFunctionAlgebra):
            ACharacterService.is_admissible([], self.chars_c2)

    def test_random_generators_are_admissible_for_pointwise_algebras(self):
        # on C^n the closure of generic functions is already everything
        f = self.random_function(self.c2, 3)
        result = ACharacterService.is_admissible([f], self.chars_c2)

        self.assertTrue(result.admissible)
