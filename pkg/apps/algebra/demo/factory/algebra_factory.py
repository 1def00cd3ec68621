import factory
import numpy as np

from apps.algebra.demo.factory.algebra_factory_settings import (
    MAX_RANDOM_DIM,
    MIN_RANDOM_DIM,
)
from apps.algebra.models import Algebra, Element


def gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def change_of_basis(dim: int, seed: int) -> np.ndarray:
    """
    Columns write f_i in the idempotents delta_k: a random unitary times a diagonal in [0.5, 2],
    so the character matrix (whose rows are the rows of the change) stays well conditioned.
    """

    rng = np.random.default_rng(seed)
    unitary, _ = np.linalg.qr(gaussian(rng, (dim, dim)))
    return unitary @ np.diag(rng.uniform(0.5, 2.0, dim))


def semisimple_structure(change: np.ndarray) -> np.ndarray:
    # f_i f_j = sum_k B[k, i] B[k, j] delta_k and delta_k = sum_m Binv[m, k] f_m
    structure = np.einsum("ki,kj,mk->ijm", change, change, np.linalg.inv(change))
    return (structure + structure.transpose(1, 0, 2)) / 2


class AlgebraFactory(factory.Factory):
    """C^dim written in a random basis f_i = sum_k B[k, i] delta_k."""

    class Meta:
        model = Algebra

    class Params:
        dim = 3
        seed = factory.Sequence(lambda n: n)
        change = factory.LazyAttribute(lambda o: change_of_basis(o.dim, o.seed))

    algebra_id = factory.LazyAttribute(lambda o: f"random:{o.dim}:{o.seed}")
    basis_names = factory.LazyAttribute(lambda o: tuple(f"f{i}" for i in range(o.dim)))
    structure = factory.LazyAttribute(lambda o: semisimple_structure(o.change))
    unit = factory.LazyAttribute(lambda o: np.linalg.inv(o.change) @ np.ones(o.dim, dtype=complex))

    @classmethod
    def family(cls, count: int, seed: int = 0) -> list[Algebra]:
        """`count` algebras of seeded random dimension."""

        rng = np.random.default_rng(seed)
        dims = rng.integers(MIN_RANDOM_DIM, MAX_RANDOM_DIM + 1, size=count)
        return [cls(dim=int(dim), seed=seed * 100_003 + i) for i, dim in enumerate(dims)]


class ElementFactory(factory.Factory):
    class Meta:
        model = Element

    class Params:
        rng = factory.LazyFunction(lambda: np.random.default_rng(0))

    algebra = factory.SubFactory(AlgebraFactory)
    coeffs = factory.LazyAttribute(lambda o: gaussian(o.rng, o.algebra.dim))
