import numpy as np

from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.tests.test_algebra.base_test_case import AlgebraBaseTestCase
from apps.core.exceptions import AlgebraMismatch, NotInvertible


class MultiplyTest(AlgebraBaseTestCase):
    def test_pointwise_product(self):
        product = AlgebraService.mul(self.c2.element([1, 2]), self.c2.element([3, 4]))

        self.assertComplexClose(product.coeffs, [3, 8])

    def test_dual_numbers(self):
        t = self.dual.element([0, 1])

        self.assertComplexClose(AlgebraService.mul(t, t).coeffs, [0, 0])
        # (2 + 3t)(1 - t) = 2 + t
        product = AlgebraService.mul(self.dual.element([2, 3]), self.dual.element([1, -1]))
        self.assertComplexClose(product.coeffs, [2, 1])

    def test_cyclic_group(self):
        g1 = self.z4.basis_element(1)
        g3 = self.z4.basis_element(3)

        self.assertComplexClose(AlgebraService.mul(g1, g3).coeffs, self.z4.unit)

    def test_unit_and_commutativity(self):
        a = self.random_element(self.random)
        b = self.random_element(self.random)

        self.assertComplexClose(AlgebraService.mul(a, self.random.one()).coeffs, a.coeffs)
        self.assertComplexClose(AlgebraService.mul(a, b).coeffs, AlgebraService.mul(b, a).coeffs)

    def test_mismatched_algebras(self):
        with self.assertRaises(AlgebraMismatch):
            AlgebraService.mul(self.c2.one(), self.split.one())

    def test_regular_repr(self):
        a = self.random_element(self.random)
        x = self.random_element(self.random)
        matrix = AlgebraService.regular_repr(a)

        self.assertComplexClose(matrix @ x.coeffs, AlgebraService.mul(a, x).coeffs)
        self.assertComplexClose(AlgebraService.regular_repr(self.random.one()), np.eye(4))

    def test_regular_repr_is_multiplicative(self):
        for algebra in (self.random, self.dual, self.z4):
            a = self.random_element(algebra)
            b = self.random_element(algebra)

            self.assertComplexClose(
                AlgebraService.regular_repr(AlgebraService.mul(a, b)),
                AlgebraService.regular_repr(a) @ AlgebraService.regular_repr(b),
                atol=1e-8,
            )


class InvertTest(AlgebraBaseTestCase):
    def test_invert(self):
        a = self.random_element(self.random)
        inverse = AlgebraService.invert(a)

        self.assertComplexClose(AlgebraService.mul(a, inverse).coeffs, self.random.unit)

    def test_invert_dual(self):
        inverse = AlgebraService.invert(self.dual.element([2, 3]))

        # (2 + 3t)^-1 = 1/2 - 3/4 t
        self.assertComplexClose(inverse.coeffs, [0.5, -0.75])

    def test_nilpotent_is_not_invertible(self):
        with self.assertRaises(NotInvertible) as context:
            AlgebraService.invert(self.dual.element([0, 1]))

        self.assertEqual(context.exception.smallest_singular_value, 0.0)

    def test_idempotent_is_not_invertible(self):
        with self.assertRaises(NotInvertible):
            AlgebraService.invert(self.c2.element([1, 0]))


class NormTest(AlgebraBaseTestCase):
    def test_examples(self):
        self.assertAlmostEqual(AlgebraService.norm(self.dual.element([0, 1])), 1.0)
        self.assertAlmostEqual(AlgebraService.norm(self.c2.element([3, -4])), 4.0)
        self.assertAlmostEqual(AlgebraService.norm(self.c3.one()), 1.0)

    def test_submultiplicative(self):
        for _ in range(20):
            a = self.random_element(self.random)
            b = self.random_element(self.random)
            product = AlgebraService.norm(AlgebraService.mul(a, b))

            self.assertLessEqual(product, AlgebraService.norm(a) * AlgebraService.norm(b) + 1e-10)

    def test_coeffs_norm(self):
        self.assertAlmostEqual(AlgebraService.coeffs_norm(self.c2, np.array([1j, -2])), 2.0)


class SemisimpleTest(AlgebraBaseTestCase):
    def test_gallery(self):
        self.assertTrue(AlgebraService.is_semisimple(self.c2))
        self.assertTrue(AlgebraService.is_semisimple(self.split))
        self.assertTrue(AlgebraService.is_semisimple(self.z4))
        self.assertTrue(AlgebraService.is_semisimple(self.random))
        self.assertFalse(AlgebraService.is_semisimple(self.dual))

    def test_dual_witness(self):
        witness = AlgebraService.is_semisimple(self.dual)

        self.assertFalse(witness.semisimple)
        # trace form of C[t]/(t^2) is diag(2, 0)
        np.testing.assert_allclose(witness.singular_values, [2, 0], atol=1e-12)
