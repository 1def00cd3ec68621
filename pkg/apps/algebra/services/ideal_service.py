from dataclasses import dataclass

import numpy as np
from django.conf import settings

from apps.algebra.models import Algebra, Element, SubspaceBasis
from apps.algebra.services.algebra_service import AlgebraService
from apps.core.exceptions import AlgebraMismatch, NumericalFailure, OracleDisagreement


@dataclass(frozen=True)
class Membership:
    """Outcome of the unit-membership test of an ideal."""

    contains_unit: bool
    residual: float


class IdealService:
    @staticmethod
    def ideal_span(
        algebra: Algebra,
        generators: list[Element],
        rank_tol: float | None = None,
        radius: float | None = None,
    ) -> SubspaceBasis:
        """
        Orthonormal basis of the ideal generated by `generators`.

        Singular values at most `rank_tol` times the largest one, or at most the absolute
        `radius`, count as zero. Passing the dedup radius puts the rank decision on the
        same scale as the character image.

        Note:
            In a commutative unital finite-dimensional algebra the ideal A S equals
            span{e_i s : i < dim, s in S}, the joint column space of the L_s.

        """
        rank_tol = settings.GELFAND["RANK_TOL"] if rank_tol is None else rank_tol
        radius = 0.0 if radius is None else radius
        if not generators:
            raise ValueError("An ideal needs at least one generator.")
        for generator in generators:
            if generator.algebra_id != algebra.algebra_id:
                raise AlgebraMismatch(
                    f"Generator of '{generator.algebra_id}' in an ideal of '{algebra.algebra_id}'."
                )

        products = np.hstack([AlgebraService.regular_repr(g) for g in generators])
        left, singular_values, _ = np.linalg.svd(products, full_matrices=False)

        if singular_values.size == 0 or singular_values[0] == 0:
            return SubspaceBasis(np.zeros((algebra.dim, 0), dtype=complex), rank_tol)

        cut = max(rank_tol * singular_values[0], radius)
        rank = int(np.sum(singular_values > cut))
        return SubspaceBasis(left[:, :rank], rank_tol)

    @staticmethod
    def contains_unit(
        span: SubspaceBasis, algebra: Algebra, tol: float | None = None
    ) -> Membership:
        """
        True iff ||1 - proj(1)|| <= tol; the residual is returned either way.

        Raises:
            NumericalFailure: residual inside (tol, AMBIGUOUS_UPPER).

        """
        config = settings.GELFAND
        tol = config["CERTIFICATE_TOL"] if tol is None else tol
        residual = float(np.linalg.norm(algebra.unit - span.project(algebra.unit)))
        if tol < residual < config["AMBIGUOUS_UPPER"]:
            raise NumericalFailure(residual, "Unit-membership residual in the ambiguous zone.")
        return Membership(residual <= tol, residual)

    @classmethod
    def in_joint_spectrum(
        cls,
        algebra: Algebra,
        elements: list[Element],
        point: np.ndarray,
        radius: float | None = None,
    ) -> Membership:
        """
        Membership predicate of a joint spectrum: lambda is in SP(a_1..a_n) iff 1 is not
        in the ideal generated by {lambda_i 1 - a_i}.

        Returns:
            Membership: `contains_unit` is the negation of spectrum membership.

        """
        radius = settings.GELFAND["DEDUP_RADIUS"] if radius is None else radius
        generators = [
            algebra.scalar(value) - element for value, element in zip(point, elements)
        ]
        return cls.contains_unit(cls.ideal_span(algebra, generators, radius=radius), algebra)

    @staticmethod
    def check_agreement(in_spectrum: bool, distance: float, radius: float, message: str, **payload):
        """
        Compare an ideal-membership verdict with the character-image distance.

        The two oracles measure lambda on different scales (singular values against
        sup-distance), so a disagreement with the distance within a factor MEMBERSHIP_BAND
        of the radius is ambiguous, not contradictory.

        Raises:
            NumericalFailure: disagreement near the radius.
            OracleDisagreement: disagreement anywhere else.

        """
        if (distance <= radius) == in_spectrum:
            return
        band = settings.GELFAND["MEMBERSHIP_BAND"]
        if radius / band <= distance <= radius * band:
            raise NumericalFailure(distance, "lambda lies too close to the dedup radius to classify.")
        raise OracleDisagreement(message, in_ideal_spectrum=in_spectrum, distance=distance, **payload)
