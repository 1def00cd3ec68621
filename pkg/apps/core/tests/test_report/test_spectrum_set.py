import numpy as np

from apps.core.models import FUNCTION, SCALAR, SpectrumSet
from apps.core.tests.base_test import CoreBaseTestCase


class SpectrumSetTest(CoreBaseTestCase):
    def test_from_points_sorts_and_dedups(self):
        spectrum = SpectrumSet.from_points([2, 1 + 1e-9, 1, 3j], 1e-7, SCALAR)

        self.assertEqual(len(spectrum), 3)
        self.assertEqual(spectrum.scalars()[0], 3j)
        self.assertAlmostEqual(spectrum.scalars()[1], 1, delta=1e-8)
        self.assertEqual(spectrum.scalars()[2], 2)

    def test_labels_follow_the_kept_points(self):
        spectrum = SpectrumSet.from_points([5, 1, 5], 1e-7, SCALAR, labels=["a", "b", "c"])

        self.assertEqual(spectrum.labels, ("b", "a"))

    def test_empty_set(self):
        spectrum = SpectrumSet.from_points([], 1e-7, FUNCTION, width=3)

        self.assertEqual(len(spectrum), 0)
        self.assertEqual(spectrum.width, 3)
        self.assertEqual(spectrum.distance_to([0, 0, 0]), float("inf"))

    def test_distance_and_contains(self):
        spectrum = SpectrumSet.from_points([[1, 2], [3, 4]], 1e-7, FUNCTION)

        self.assertAlmostEqual(spectrum.distance_to([1, 2.5]), 0.5)
        self.assertTrue(spectrum.contains([3, 4 + 1e-9]))
        self.assertFalse(spectrum.contains([3, 4.1]))
        self.assertEqual(spectrum.nearest([2.9, 4]), 1)

    def test_hausdorff(self):
        first = SpectrumSet.from_points([0, 1], 1e-7)
        second = SpectrumSet.from_points([0, 1.5], 1e-7)

        self.assertAlmostEqual(first.hausdorff(second), 0.5)
        self.assertEqual(first.hausdorff(first), 0.0)
        self.assertEqual(SpectrumSet.from_points([], 1e-7).hausdorff(first), float("inf"))

    def test_custom_distance(self):
        spectrum = SpectrumSet.from_points(
            [[0, 0], [1, 1]], 1e-7, distance=lambda d: float(np.sum(np.abs(d)))
        )

        self.assertAlmostEqual(spectrum.distance_to([0.5, 0]), 0.5)
        self.assertTrue(SpectrumSet.from_points([[1, 1]], 1e-7).is_subset_of(spectrum))
