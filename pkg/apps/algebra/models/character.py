from dataclasses import dataclass

import numpy as np

from apps.algebra.models.algebra import Algebra, Element


@dataclass(frozen=True, eq=False)
class Character:
    """
    A multiplicative linear functional phi: A -> C, stored by its values phi(e_i).

    Attributes:
        values (np.ndarray): phi(e_i) for every basis vector.
        algebra_id (str): tag of the algebra the functional lives on.
        residual (float): multiplicativity plus unit residual after refinement.

    """

    values: np.ndarray
    algebra_id: str
    residual: float = 0.0

    def __call__(self, element: Element) -> complex:
        return complex(self.values @ element.coeffs)


@dataclass(frozen=True, eq=False)
class CharacterSet:
    """
    The character space M(A) of a finite-dimensional algebra.

    Note: pairwise sup-distance between value vectors is larger than `dedup_radius`,
    and the characters are ordered lexicographically by value vector.

    """

    characters: tuple
    dedup_radius: float
    algebra: Algebra
    seed: int = 0

    def __len__(self) -> int:
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __getitem__(self, index: int) -> Character:
        return self.characters[index]

    @property
    def algebra_id(self) -> str:
        return self.algebra.algebra_id

    @property
    def matrix(self) -> np.ndarray:
        """Character matrix: one row phi(e_0), ..., phi(e_{dim-1}) per character."""

        if not self.characters:
            return np.zeros((0, self.algebra.dim), dtype=complex)
        return np.vstack([c.values for c in self.characters])

    @property
    def worst_residual(self) -> float:
        return max((c.residual for c in self.characters), default=0.0)


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Orthonormal columns spanning a linear subspace of the algebra (e.g. an ideal)."""

    vectors: np.ndarray
    tolerance: float

    @property
    def rank(self) -> int:
        return self.vectors.shape[1]

    def project(self, x: np.ndarray) -> np.ndarray:
        if self.rank == 0:
            return np.zeros_like(x)
        return self.vectors @ (self.vectors.conj().T @ x)
