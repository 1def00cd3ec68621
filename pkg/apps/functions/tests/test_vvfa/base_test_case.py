import numpy as np

from apps.algebra.services.character_service import CharacterService
from apps.algebra.services.gallery_service import GalleryService
from apps.core.tests.base_test import CoreBaseTestCase
from apps.functions.demo.factory.function_factory import FunctionFactory, ScalarFunctionFactory
from apps.functions.demo.factory.space_factory import FiniteSpaceFactory
from apps.functions.models import FiniteSpace, ScalarFunction


class FunctionsBaseTestCase(CoreBaseTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.c1 = GalleryService.gallery("C1")
        cls.c2 = GalleryService.gallery("C2")
        cls.dual = GalleryService.gallery("dual")
        cls.split = GalleryService.gallery("split")
        cls.z4 = GalleryService.gallery("Z4")
        cls.pq = FiniteSpace(("p", "q"))

        # f(p) = (1, 2), f(q) = (3, 4) into C2
        cls.f_c2 = FunctionFactory(algebra=cls.c2, rows={"p": [1, 2], "q": [3, 4]})
        cls.chars_c2 = CharacterService.characters(cls.c2)

    def setUp(self):
        self.rng = np.random.default_rng(7)

    @staticmethod
    def lam(space: FiniteSpace, values) -> ScalarFunction:
        return ScalarFunctionFactory(space=space, values=np.asarray(values, dtype=complex))

    def random_function(self, algebra, size: int):
        return FunctionFactory(algebra=algebra, space=FiniteSpaceFactory(size=size), rng=self.rng)
