from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

import numpy as np

SCALAR = "scalar"
TUPLE = "tuple"
FUNCTION = "function"
ELEMENT = "element"


def sup_distance(difference: np.ndarray) -> float:
    """Max modulus of a difference vector; the default metric for every spectrum."""

    if difference.size == 0:
        return 0.0
    return float(np.max(np.abs(difference)))


@dataclass(frozen=True, eq=False)
class SpectrumSet:
    """
    A finite, tolerance-aware set of points in C^n.

    Houses the scalar spectrum sp(a) (n=1), joint spectra (tuples), vector-valued
    spectra (scalar functions tabulated over a finite space) and A-valued spectra
    (coefficient vectors of algebra elements, compared in the algebra norm).

    Attributes:
        points (np.ndarray): complex array of shape (k, n), deduplicated and sorted.
        radius (float): dedup and membership radius.
        kind (str): one of "scalar", "tuple", "function", "element".
        labels (tuple): provenance of each point, e.g. the character that produced it.
        distance (Callable): metric applied to a difference of two points.

    """

    points: np.ndarray
    radius: float
    kind: str = SCALAR
    labels: tuple = ()
    distance: Callable[[np.ndarray], float] = field(default=sup_distance)

    @classmethod
    def from_points(
        cls,
        points: Iterable,
        radius: float,
        kind: str = SCALAR,
        labels: Iterable | None = None,
        distance: Callable[[np.ndarray], float] = sup_distance,
        width: int | None = None,
    ):
        """
        Sort points lexicographically and drop every point within `radius` of an earlier one.

        Args:
            points: iterable of scalars or 1-d arrays.
            radius (float): dedup radius.
            kind (str): spectrum kind tag.
            labels: optional provenance, one entry per point.
            distance: metric on differences.
            width (int): point width, needed only when `points` is empty.

        """
        rows = [np.atleast_1d(np.asarray(p, dtype=complex)) for p in points]
        labels = list(labels) if labels is not None else [None] * len(rows)

        if not rows:
            return cls(np.zeros((0, width or 1), dtype=complex), radius, kind, (), distance)

        order = sorted(range(len(rows)), key=lambda i: cls.sort_key(rows[i]))
        kept, kept_labels = [], []
        for i in order:
            if all(distance(rows[i] - other) > radius for other in kept):
                kept.append(rows[i])
                kept_labels.append(labels[i])

        return cls(np.vstack(kept), radius, kind, tuple(kept_labels), distance)

    @staticmethod
    def sort_key(point: np.ndarray) -> tuple:
        # rounding keeps the order stable under float noise below the dedup radius
        return tuple(v for z in point for v in (round(z.real, 9), round(z.imag, 9)))

    def __len__(self) -> int:
        return self.points.shape[0]

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.points)

    @property
    def width(self) -> int:
        return self.points.shape[1]

    def distance_to(self, point) -> float:
        """Smallest distance from `point` to the set (inf for the empty set)."""

        point = np.atleast_1d(np.asarray(point, dtype=complex))
        if len(self) == 0:
            return float("inf")
        return min(self.distance(row - point) for row in self.points)

    def nearest(self, point) -> int:
        point = np.atleast_1d(np.asarray(point, dtype=complex))
        return int(np.argmin([self.distance(row - point) for row in self.points]))

    def contains(self, point, radius: float | None = None) -> bool:
        return self.distance_to(point) <= (self.radius if radius is None else radius)

    def hausdorff(self, other: "SpectrumSet") -> float:
        """Symmetric Hausdorff distance between two sets under this set's metric."""

        if len(self) == 0 and len(other) == 0:
            return 0.0
        if len(self) == 0 or len(other) == 0:
            return float("inf")

        forward = max(other.distance_to(p) for p in self.points)
        backward = max(self.distance_to(p) for p in other.points)
        return max(forward, backward)

    def is_subset_of(self, other: "SpectrumSet", radius: float | None = None) -> bool:
        return all(other.contains(p, radius) for p in self.points)

    def scalars(self) -> list[complex]:
        """The points of a one-column set as plain complex numbers."""

        return [complex(p[0]) for p in self.points]
