import json
from dataclasses import dataclass

import numpy as np

from apps.core.exceptions import DimensionMismatch, InputError, MetricViolation

METRIC_BOUND = 1e-12
# a point label holding one of these would make the comma-joined label ambiguous
RESERVED_LABEL_CHARS = frozenset(",;()[]\"")


@dataclass(frozen=True)
class FiniteSpace:
    """A finite discrete space X given by distinct point labels."""

    points: tuple

    def __post_init__(self):
        if not self.points:
            raise DimensionMismatch("A space needs at least one point.")
        if len(set(self.points)) != len(self.points):
            raise InputError("Point labels must be distinct.")

    @classmethod
    def of_size(cls, size: int, prefix: str = "x") -> "FiniteSpace":
        return cls(tuple(f"{prefix}{i}" for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def label(self) -> str:
        """Comma-joined point labels, or their JSON list when some label holds a reserved character."""

        if any(RESERVED_LABEL_CHARS.intersection(point) for point in self.points):
            return json.dumps(list(self.points))
        return ",".join(self.points)

    def index(self, point: str) -> int:
        return self.points.index(point)

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point) -> bool:
        return point in self.points


@dataclass(frozen=True, eq=False)
class FiniteMetric:
    """
    A metric rho on a finite space, stored as its distance matrix.

    Metrics are validated, never repaired: asymmetry, a nonzero diagonal, a
    non-positive distance between distinct points or a triangle violation beyond
    1e-12 raises `MetricViolation`.

    """

    space: FiniteSpace
    distances: np.ndarray

    def __post_init__(self):
        n = self.space.size
        d = self.distances
        if d.shape != (n, n):
            raise DimensionMismatch(f"Distance matrix has shape {d.shape}, expected {(n, n)}.")

        asymmetry = float(np.max(np.abs(d - d.T)))
        if asymmetry > METRIC_BOUND:
            raise MetricViolation("symmetry", asymmetry)

        diagonal = float(np.max(np.abs(np.diag(d))))
        if diagonal > METRIC_BOUND:
            raise MetricViolation("zero diagonal", diagonal)

        off_diagonal = d[~np.eye(n, dtype=bool)]
        if off_diagonal.size and off_diagonal.min() <= 0:
            raise MetricViolation("positivity", float(off_diagonal.min()))

        # d(x, z) <= d(x, y) + d(y, z) for every y
        excess = d[:, np.newaxis, :] - d[:, :, np.newaxis] - d[np.newaxis, :, :]
        worst = float(np.max(excess))
        if worst > METRIC_BOUND:
            raise MetricViolation("triangle inequality", worst)

    def distance(self, x: str, y: str) -> float:
        return float(self.distances[self.space.index(x), self.space.index(y)])

    def pairs(self):
        """Index pairs (i, j), i < j, with their distance."""

        n = self.space.size
        for i in range(n):
            for j in range(i + 1, n):
                yield i, j, float(self.distances[i, j])
