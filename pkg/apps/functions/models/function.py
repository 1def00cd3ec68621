from dataclasses import dataclass
from numbers import Number

import numpy as np

from apps.algebra.models import Algebra, CharacterSet, Element
from apps.core.exceptions import AlgebraMismatch, DimensionMismatch
from apps.functions.models.space import FiniteSpace


@dataclass(frozen=True, eq=False)
class AValuedFunction:
    """
    A function f: X -> A on a finite space.

    Attributes:
        space (FiniteSpace): the domain X.
        algebra (Algebra): the codomain A.
        values (np.ndarray): complex array of shape (|X|, dim A); row x holds the
            coefficients of f(x).

    Note: flattened point-major, `values` is the coordinate vector of f in the
    product algebra C(X, A) built by `FunctionService.make_cxa`.

    """

    space: FiniteSpace
    algebra: Algebra
    values: np.ndarray

    def __post_init__(self):
        expected = (self.space.size, self.algebra.dim)
        if self.values.shape != expected:
            raise DimensionMismatch(f"Function values have shape {self.values.shape}, expected {expected}.")

    @property
    def algebra_id(self) -> str:
        return self.algebra.algebra_id

    def __call__(self, point: str) -> Element:
        return Element(self.values[self.space.index(point)], self.algebra)

    def elements(self) -> list[Element]:
        return [Element(row, self.algebra) for row in self.values]

    def as_coeffs(self) -> np.ndarray:
        return self.values.reshape(-1)

    def check_compatible(self, other: "AValuedFunction"):
        if self.algebra_id != other.algebra_id:
            raise AlgebraMismatch(
                f"Functions into '{self.algebra_id}' and '{other.algebra_id}' cannot be combined."
            )
        if self.space != other.space:
            raise DimensionMismatch("Functions live on different spaces.")

    def __add__(self, other: "AValuedFunction") -> "AValuedFunction":
        self.check_compatible(other)
        return AValuedFunction(self.space, self.algebra, self.values + other.values)

    def __sub__(self, other: "AValuedFunction") -> "AValuedFunction":
        self.check_compatible(other)
        return AValuedFunction(self.space, self.algebra, self.values - other.values)

    def __neg__(self) -> "AValuedFunction":
        return AValuedFunction(self.space, self.algebra, -self.values)

    def __mul__(self, scalar: Number) -> "AValuedFunction":
        # pointwise algebra products go through FunctionService.multiply
        if not isinstance(scalar, Number):
            return NotImplemented
        return AValuedFunction(self.space, self.algebra, scalar * self.values)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class ScalarFunction:
    """A function lambda: X -> C."""

    space: FiniteSpace
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (self.space.size,):
            raise DimensionMismatch(
                f"Scalar function has {self.values.shape} values, space has {self.space.size} points."
            )

    def __call__(self, point: str) -> complex:
        return complex(self.values[self.space.index(point)])

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values)))

    def __sub__(self, other: "ScalarFunction") -> "ScalarFunction":
        if self.space != other.space:
            raise DimensionMismatch("Scalar functions live on different spaces.")
        return ScalarFunction(self.space, self.values - other.values)

    def __add__(self, other: "ScalarFunction") -> "ScalarFunction":
        if self.space != other.space:
            raise DimensionMismatch("Scalar functions live on different spaces.")
        return ScalarFunction(self.space, self.values + other.values)


@dataclass(frozen=True, eq=False)
class FTilde:
    """
    The correspondence phi -> phi o f on the character space of A.

    Row i of `table` is phi_i o f tabulated over the space, in the order of `chars`.
    """

    chars: CharacterSet
    space: FiniteSpace
    table: np.ndarray

    def __call__(self, index: int) -> ScalarFunction:
        return ScalarFunction(self.space, self.table[index])

    def __len__(self) -> int:
        return self.table.shape[0]

    def rows(self) -> list[ScalarFunction]:
        return [self(i) for i in range(len(self))]
