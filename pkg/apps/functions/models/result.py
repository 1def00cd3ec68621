from dataclasses import dataclass, field

import numpy as np

from apps.algebra.models import Character, Element
from apps.core.models import SpectrumSet
from apps.functions.models.function import ScalarFunction

EVALUATION = "evaluation"
GENERAL = "general"


@dataclass(frozen=True)
class SpectrumMembership:
    """Ideal-membership verdict on one lambda; `distance` is to the character image when known."""

    in_spectrum: bool
    residual: float
    distance: float | None = None


@dataclass(frozen=True, eq=False)
class Certificate:
    """
    Witness of lambda not in SP(f): 1 = sum_i a_i (lambda(x_i) 1 - f(x_i)).

    Attributes:
        points (tuple): the labels x_i kept after pruning.
        coefficients (tuple): the elements a_i, one per point.
        residual (float): algebra norm of 1 - sum_i a_i (lambda(x_i) 1 - f(x_i)).
        norm_sum (float): sum_i ||a_i||, the scale of the neighbourhood it protects.

    """

    points: tuple
    coefficients: tuple
    residual: float
    norm_sum: float

    @property
    def epsilon(self) -> float:
        return 1 / (2 * self.norm_sum)


@dataclass(frozen=True, eq=False)
class InSpectrum:
    """lambda belongs to SP(f); `character` is the phi with phi o f closest to lambda."""

    character: Character
    index: int
    distance: float
    residual: float


@dataclass(frozen=True, eq=False)
class ACharacter:
    """
    A linear map Psi: C(X, A) -> A given by its matrix on the point-major basis.

    Attributes:
        matrix (np.ndarray): shape (dim A, |X| dim A).
        kind (str): "evaluation" when Psi is the evaluation at `point`, else "general".
        point (str): the evaluated point, or None.
        residuals (dict): homomorphism, unit and compatibility residuals.

    """

    matrix: np.ndarray
    kind: str = GENERAL
    point: str | None = None
    residuals: dict = field(default_factory=dict)

    def apply(self, coeffs: np.ndarray) -> np.ndarray:
        return self.matrix @ coeffs


@dataclass(frozen=True, eq=False)
class AValuedSpectrum:
    """SP_A(f) next to the two sets of the inclusion chain f(X) within {Psi(f)} within SP_A(f)."""

    spectrum: SpectrumSet
    image: SpectrumSet
    lifted: SpectrumSet
    residuals: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    residual: float
    closure_dim: int


@dataclass(frozen=True, eq=False)
class ExtendedFunction:
    """F: M(C(X)) -> A with phi(F(psi)) = psi(phi o f); entry i belongs to the i-th psi."""

    values: tuple
    residual: float

    def elements(self) -> list[Element]:
        return list(self.values)


@dataclass(frozen=True)
class LipschitzSummary:
    uniform: float
    constant: float
    norm: float


@dataclass(frozen=True)
class ScalarRestriction:
    character: Character
    embedding_residual: float
