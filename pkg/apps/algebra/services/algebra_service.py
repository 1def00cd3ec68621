import logging

import numpy as np
from django.conf import settings

from apps.algebra.models import Algebra, Diagnostics, Element, SemisimplicityWitness
from apps.core.exceptions import (
    AlgebraMismatch,
    AxiomViolation,
    DimensionMismatch,
    NotInvertible,
)

logger = logging.getLogger(__name__)

COMMUTATIVITY_BOUND = 1e-12
ASSOCIATIVITY_BOUND = 1e-10
UNIT_BOUND = 1e-10
INVERSE_BOUND = 1e-9


class AlgebraService:
    """Arithmetic, regular representation and structural checks of an `Algebra`."""

    # ------------------
    # --- Validation ---
    # ------------------

    @classmethod
    def validate_algebra(cls, algebra: Algebra) -> Diagnostics:
        """
        Measure the commutativity, associativity and unit residuals of an algebra.

        Args:
            algebra (Algebra): the algebra to check.

        Returns:
            Diagnostics: max-norm residual of each axiom.

        Raises:
            DimensionMismatch: if the structure tensor or unit has the wrong shape.
            AxiomViolation: for the first axiom (commutativity, associativity, unit) whose
                residual exceeds its bound.

        """
        c = algebra.structure
        dim = algebra.dim
        if c.shape != (dim, dim, dim) or algebra.unit.shape != (dim,):
            raise DimensionMismatch("Structure tensor and unit do not match the basis.")

        diagnostics = Diagnostics(
            commutativity=cls.__max_abs(c - c.transpose(1, 0, 2)),
            associativity=cls.__max_abs(
                # (e_i e_j) e_l - e_i (e_j e_l)
                np.einsum("ijk,klm->ijlm", c, c) - np.einsum("jlk,ikm->ijlm", c, c)
            ),
            unit=cls.__max_abs(np.einsum("i,ijk->jk", algebra.unit, c) - np.eye(dim)),
        )

        for axiom, residual, bound in (
            ("commutativity", diagnostics.commutativity, COMMUTATIVITY_BOUND),
            ("associativity", diagnostics.associativity, ASSOCIATIVITY_BOUND),
            ("unit", diagnostics.unit, UNIT_BOUND),
        ):
            if not residual <= bound:
                raise AxiomViolation(axiom, residual)

        return diagnostics

    @staticmethod
    def __max_abs(array: np.ndarray) -> float:
        return float(np.max(np.abs(array))) if array.size else 0.0

    @staticmethod
    def check_same_algebra(*elements: Element):
        ids = {element.algebra_id for element in elements}
        if len(ids) > 1:
            raise AlgebraMismatch(f"Elements belong to different algebras: {sorted(ids)}.")

    # ------------------
    # --- Arithmetic ---
    # ------------------

    @classmethod
    def mul(cls, a: Element, b: Element) -> Element:
        """(a b)_k = sum_{i,j} a_i b_j c[i, j, k]."""

        cls.check_same_algebra(a, b)
        coeffs = np.einsum("i,j,ijk->k", a.coeffs, b.coeffs, a.algebra.structure)
        return Element(coeffs, a.algebra)

    @staticmethod
    def regular_repr(a: Element) -> np.ndarray:
        """Matrix L_a with L_a x = a x; column j is the product a e_j."""

        return np.einsum("i,ijk->kj", a.coeffs, a.algebra.structure)

    @classmethod
    def invert(cls, a: Element, rank_tol: float | None = None) -> Element:
        """
        Return b with a b = 1.

        Raises:
            NotInvertible: if the smallest singular value of L_a is at most
                rank_tol times the largest one; carries that smallest singular value.

        """
        rank_tol = settings.GELFAND["RANK_TOL"] if rank_tol is None else rank_tol
        matrix = cls.regular_repr(a)
        singular_values = np.linalg.svd(matrix, compute_uv=False)

        if singular_values[0] == 0 or singular_values[-1] <= rank_tol * singular_values[0]:
            raise NotInvertible(float(singular_values[-1]))

        inverse = Element(np.linalg.solve(matrix, a.algebra.unit), a.algebra)
        residual = cls.norm(cls.mul(a, inverse) - a.algebra.one())
        if residual > INVERSE_BOUND:
            logger.warning("Inverse residual %.3e above %.0e", residual, INVERSE_BOUND)
            raise NotInvertible(float(singular_values[-1]))
        return inverse

    # ------------------------------
    # --- Norm and semisimplicity ---
    # ------------------------------

    @classmethod
    def norm(cls, a: Element) -> float:
        """Operator 2-norm of the regular representation (the algebra norm)."""

        return float(np.linalg.norm(cls.regular_repr(a), 2))

    @classmethod
    def algebra_norm(cls, a: Element) -> float:
        return cls.norm(a)

    @classmethod
    def coeffs_norm(cls, algebra: Algebra, coeffs: np.ndarray) -> float:
        """Algebra norm of a raw coefficient vector."""

        return cls.norm(Element(np.asarray(coeffs, dtype=complex), algebra))

    @classmethod
    def trace_form(cls, algebra: Algebra) -> np.ndarray:
        """B[i, j] = trace(L_{e_i} L_{e_j})."""

        representations = np.einsum("ijk->ikj", algebra.structure)
        return np.einsum("iab,jba->ij", representations, representations)

    @classmethod
    def is_semisimple(
        cls, algebra: Algebra, tol: float | None = None
    ) -> SemisimplicityWitness:
        """
        Semisimplicity test through the trace form.

        Note:
            For commutative finite-dimensional algebras over C the trace form is
            nonsingular exactly when the Jacobson radical vanishes.

        """
        tol = settings.GELFAND["RANK_TOL"] if tol is None else tol
        singular_values = np.linalg.svd(cls.trace_form(algebra), compute_uv=False)
        semisimple = bool(singular_values[-1] > tol * singular_values[0])
        return SemisimplicityWitness(semisimple, singular_values)
