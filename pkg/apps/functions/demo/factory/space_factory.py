import factory
import numpy as np

from apps.functions.demo.factory.functions_factory_settings import PLANE_SCALE
from apps.functions.models import FiniteMetric, FiniteSpace


def planar_distances(size: int, seed: int) -> np.ndarray:
    """Euclidean distances between `size` random points of a square."""

    points = np.random.default_rng(seed).uniform(0, PLANE_SCALE, size=(size, 2))
    return np.linalg.norm(points[:, np.newaxis, :] - points[np.newaxis, :, :], axis=2)


class FiniteSpaceFactory(factory.Factory):
    class Meta:
        model = FiniteSpace

    class Params:
        size = 3
        prefix = "x"

    points = factory.LazyAttribute(lambda o: tuple(f"{o.prefix}{i}" for i in range(o.size)))


class FiniteMetricFactory(factory.Factory):
    class Meta:
        model = FiniteMetric

    class Params:
        size = 3
        seed = factory.Sequence(lambda n: n)

    space = factory.SubFactory(FiniteSpaceFactory, size=factory.SelfAttribute("..size"))
    distances = factory.LazyAttribute(lambda o: planar_distances(o.size, o.seed))
