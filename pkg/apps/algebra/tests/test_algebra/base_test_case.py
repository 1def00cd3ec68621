import numpy as np

from apps.algebra.demo.factory.algebra_factory import AlgebraFactory, ElementFactory
from apps.algebra.services.character_service import CharacterService
from apps.algebra.services.gallery_service import GalleryService
from apps.core.tests.base_test import CoreBaseTestCase


class AlgebraBaseTestCase(CoreBaseTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.c2 = GalleryService.gallery("C2")
        cls.c3 = GalleryService.gallery("C3")
        cls.dual = GalleryService.gallery("dual")
        cls.split = GalleryService.gallery("split")
        cls.z4 = GalleryService.gallery("Z4")
        cls.random = AlgebraFactory(dim=4, seed=11)

    def setUp(self):
        self.rng = np.random.default_rng(2024)

    @staticmethod
    def characters(algebra, **kwargs):
        return CharacterService.characters(algebra, **kwargs)

    def random_element(self, algebra):
        return ElementFactory(algebra=algebra, rng=self.rng)
