from dataclasses import dataclass
from numbers import Number

import numpy as np

from apps.core.exceptions import DimensionMismatch


@dataclass(frozen=True, eq=False)
class Algebra:
    """
    A finite-dimensional commutative unital complex algebra.

    Attributes:
        algebra_id (str): tag shared by every element, character and function of this algebra.
        basis_names (tuple): one label per basis vector e_i.
        structure (np.ndarray): complex tensor c of shape (dim, dim, dim), e_i e_j = sum_k c[i, j, k] e_k.
        unit (np.ndarray): coefficient vector of the identity.

    Note:
        Instances are not validated on construction; `AlgebraService.validate_algebra`
        checks the axioms and every parser runs it.

    """

    algebra_id: str
    basis_names: tuple
    structure: np.ndarray
    unit: np.ndarray

    def __post_init__(self):
        dim = len(self.basis_names)
        if dim == 0:
            raise DimensionMismatch("An algebra needs at least one basis vector.")
        if self.structure.shape != (dim, dim, dim):
            raise DimensionMismatch(
                f"Structure tensor has shape {self.structure.shape}, expected {(dim, dim, dim)}."
            )
        if self.unit.shape != (dim,):
            raise DimensionMismatch(f"Unit has shape {self.unit.shape}, expected ({dim},).")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def element(self, coeffs) -> "Element":
        return Element(np.asarray(coeffs, dtype=complex), self)

    def one(self) -> "Element":
        return self.element(self.unit)

    def zero(self) -> "Element":
        return self.element(np.zeros(self.dim))

    def scalar(self, value: complex) -> "Element":
        """The element value * 1, i.e. the embedding of C as C1."""

        return self.element(value * self.unit)

    def basis_element(self, index: int) -> "Element":
        return self.element(np.eye(self.dim)[index])

    def basis(self) -> list["Element"]:
        return [self.basis_element(i) for i in range(self.dim)]


@dataclass(frozen=True, eq=False)
class Element:
    """A coefficient vector over the basis of its algebra."""

    coeffs: np.ndarray
    algebra: Algebra

    def __post_init__(self):
        if self.coeffs.shape != (self.algebra.dim,):
            raise DimensionMismatch(
                f"Element has {self.coeffs.shape} coefficients, "
                f"algebra '{self.algebra.algebra_id}' has dimension {self.algebra.dim}."
            )

    @property
    def algebra_id(self) -> str:
        return self.algebra.algebra_id

    def __add__(self, other: "Element") -> "Element":
        return Element(self.coeffs + other.coeffs, self.algebra)

    def __sub__(self, other: "Element") -> "Element":
        return Element(self.coeffs - other.coeffs, self.algebra)

    def __neg__(self) -> "Element":
        return Element(-self.coeffs, self.algebra)

    def __mul__(self, scalar: Number) -> "Element":
        # scalar multiples only; algebra products go through AlgebraService.mul
        if not isinstance(scalar, Number):
            return NotImplemented
        return Element(scalar * self.coeffs, self.algebra)

    __rmul__ = __mul__


@dataclass(frozen=True)
class Diagnostics:
    """Max-norm residuals of the three algebra axioms."""

    commutativity: float
    associativity: float
    unit: float

    def as_dict(self) -> dict:
        return {
            "commutativity": self.commutativity,
            "associativity": self.associativity,
            "unit": self.unit,
        }


@dataclass(frozen=True, eq=False)
class SemisimplicityWitness:
    semisimple: bool
    singular_values: np.ndarray

    def __bool__(self):
        return self.semisimple
