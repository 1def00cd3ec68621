import logging

import numpy as np
from django.conf import settings

from apps.algebra.models import Algebra, Character, CharacterSet, Element
from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.services.character_service import CharacterService
from apps.algebra.services.gallery_service import GalleryService
from apps.core.exceptions import AlgebraMismatch, DimensionMismatch, SizeOverflow
from apps.functions.models import AValuedFunction, FiniteSpace, FTilde, ScalarFunction

logger = logging.getLogger(__name__)


class FunctionService:
    """The algebra C(X, A) of functions on a finite space and its elementary operations."""

    # ---------------------------
    # --- The algebra C(X, A) ---
    # ---------------------------

    @staticmethod
    def make_cxa(algebra: Algebra, space: FiniteSpace, max_dim: int | None = None) -> Algebra:
        """
        Realize C(X, A) = A^X as a structure-constant algebra with pointwise operations.

        The basis is point-major: basis vector x * dim + i is the function equal to
        e_i at x and 0 elsewhere, named "x:e_i". The unit is the constant function 1.

        Raises:
            SizeOverflow: if |X| dim A exceeds `max_dim` (setting CXA_MAX_DIM).

        """
        max_dim = settings.GELFAND["CXA_MAX_DIM"] if max_dim is None else max_dim
        n, dim = space.size, algebra.dim
        total = n * dim
        if total > max_dim:
            raise SizeOverflow(
                f"C(X, A) would have dimension {total} > {max_dim}.", dim=total, cap=max_dim
            )

        structure = np.zeros((total, total, total), dtype=complex)
        for x in range(n):
            block = slice(x * dim, (x + 1) * dim)
            structure[block, block, block] = algebra.structure

        return Algebra(
            algebra_id=f"C({space.label};{algebra.algebra_id})",
            basis_names=tuple(f"{x}:{name}" for x in space for name in algebra.basis_names),
            structure=structure,
            unit=np.tile(algebra.unit, n),
        )

    @staticmethod
    def scalar_algebra(space: FiniteSpace) -> Algebra:
        """The scalar function algebra C(X) = C^X on the point idempotents."""

        return GalleryService.pointwise(
            space.size, algebra_id=f"C({space.label})", names=list(space.points)
        )

    @staticmethod
    def as_element(f: AValuedFunction, cxa: Algebra) -> Element:
        return Element(f.as_coeffs().astype(complex), cxa)

    @staticmethod
    def from_coeffs(coeffs: np.ndarray, algebra: Algebra, space: FiniteSpace) -> AValuedFunction:
        return AValuedFunction(space, algebra, np.asarray(coeffs, dtype=complex).reshape(space.size, algebra.dim))

    # ----------------------
    # --- Constructions ---
    # ----------------------

    @staticmethod
    def constant(a: Element, space: FiniteSpace) -> AValuedFunction:
        return AValuedFunction(space, a.algebra, np.tile(a.coeffs, (space.size, 1)))

    @staticmethod
    def zero(algebra: Algebra, space: FiniteSpace) -> AValuedFunction:
        return AValuedFunction(space, algebra, np.zeros((space.size, algebra.dim), dtype=complex))

    @staticmethod
    def embed_scalar(lam: ScalarFunction, algebra: Algebra) -> AValuedFunction:
        """x -> lambda(x) 1, the identification of C with C1 applied pointwise."""

        return AValuedFunction(lam.space, algebra, np.outer(lam.values, algebra.unit))

    @staticmethod
    def identity_function(algebra: Algebra) -> AValuedFunction:
        """The function e_i -> e_i on the basis labels."""

        space = FiniteSpace(tuple(algebra.basis_names))
        return AValuedFunction(space, algebra, np.eye(algebra.dim, dtype=complex))

    @staticmethod
    def multiply(f: AValuedFunction, g: AValuedFunction) -> AValuedFunction:
        f.check_compatible(g)
        values = np.einsum("xi,xj,ijk->xk", f.values, g.values, f.algebra.structure)
        return AValuedFunction(f.space, f.algebra, values)

    # -------------
    # --- Norms ---
    # -------------

    @staticmethod
    def uniform_norm(f: AValuedFunction) -> float:
        """||f||_X = max over x of ||f(x)||."""

        return max(AlgebraService.norm(value) for value in f.elements())

    # -----------------------------
    # --- Composition with phi ---
    # -----------------------------

    @staticmethod
    def compose(character: Character, f: AValuedFunction) -> ScalarFunction:
        """phi o f."""

        if character.algebra_id != f.algebra_id:
            raise AlgebraMismatch(
                f"Character of '{character.algebra_id}' against a function into '{f.algebra_id}'."
            )
        return ScalarFunction(f.space, f.values @ character.values)

    @classmethod
    def f_tilde(cls, f: AValuedFunction, chars: CharacterSet) -> FTilde:
        """Tabulate phi -> phi o f over the character set."""

        if chars.algebra_id != f.algebra_id:
            raise AlgebraMismatch(
                f"Characters of '{chars.algebra_id}' against a function into '{f.algebra_id}'."
            )
        return FTilde(chars, f.space, chars.matrix @ f.values.T)

    @classmethod
    def f_tilde_function(cls, f: AValuedFunction, chars: CharacterSet) -> AValuedFunction:
        """
        f~ as a function on the finite space M(A), valued in C(X).

        Note: C(X) is taken on its point idempotents, so the coefficients of f~(phi)
        are the values of phi o f.

        """
        tilde = cls.f_tilde(f, chars)
        character_space = FiniteSpace(tuple(f"phi{i}" for i in range(len(chars))))
        return AValuedFunction(character_space, cls.scalar_algebra(f.space), tilde.table)

    @classmethod
    def scalar_characters(cls, space: FiniteSpace, seed: int | None = None) -> CharacterSet:
        """M(C(X)), computed by the character solver rather than assumed."""

        return CharacterService.characters(cls.scalar_algebra(space), seed=seed)

    @staticmethod
    def check_same_space(f: AValuedFunction, lam: ScalarFunction):
        if f.space != lam.space:
            raise DimensionMismatch("The scalar function lives on a different space.")
