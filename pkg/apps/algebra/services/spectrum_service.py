import logging
from dataclasses import dataclass, field

import numpy as np
from django.conf import settings

from apps.algebra.models import Algebra, CharacterSet, Element
from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.services.character_service import CharacterService
from apps.algebra.services.ideal_service import IdealService
from apps.core.exceptions import AlgebraMismatch, OracleDisagreement
from apps.core.models import SCALAR, TUPLE, SpectrumSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScalarSpectrum:
    """sp(a) from the characters, next to the eigenvalues of L_a it was checked against."""

    spectrum: SpectrumSet
    eigenvalues: SpectrumSet
    semisimple: bool
    residual: float


@dataclass(frozen=True)
class JointSpectrum:
    spectrum: SpectrumSet
    checked_points: int
    residuals: dict = field(default_factory=dict)


class SpectrumService:
    # ----------------
    # --- Spectrum ---
    # ----------------

    @classmethod
    def spectrum(
        cls, a: Element, chars: CharacterSet, dedup_radius: float | None = None
    ) -> ScalarSpectrum:
        """
        sp(a) = {phi(a) : phi in M(A)}, cross-checked against the eigenvalues of L_a.

        Note:
            For a semisimple algebra the two sets must coincide within the dedup
            radius. Otherwise only {phi(a)} inside eig(L_a) is required, with a radius
            widened to the eps^(1/dim) accuracy of eigenvalues of defective matrices.

        Raises:
            OracleDisagreement: if the character image and the eigenvalues disagree.

        """
        dedup_radius = settings.GELFAND["DEDUP_RADIUS"] if dedup_radius is None else dedup_radius
        algebra = a.algebra
        semisimple = AlgebraService.is_semisimple(algebra).semisimple

        image = SpectrumSet.from_points(
            CharacterService.gelfand_transform(a, chars),
            dedup_radius,
            SCALAR,
            labels=range(len(chars)),
        )

        matrix = AlgebraService.regular_repr(a)
        if semisimple:
            eigen_radius = dedup_radius
        else:
            scale = max(1.0, float(np.linalg.norm(matrix, 2)))
            eigen_radius = max(dedup_radius, (np.finfo(float).eps * scale) ** (1 / algebra.dim))
        eigenvalues = SpectrumSet.from_points(np.linalg.eigvals(matrix), eigen_radius, SCALAR)

        if semisimple:
            residual = image.hausdorff(eigenvalues)
            agree = residual <= dedup_radius
        else:
            residual = max((eigenvalues.distance_to(p) for p in image), default=0.0)
            agree = residual <= eigen_radius

        if not agree:
            raise OracleDisagreement(
                "Character image and eigenvalues of L_a disagree.",
                characters=image.scalars(),
                eigenvalues=eigenvalues.scalars(),
                residual=residual,
                semisimple=semisimple,
            )

        return ScalarSpectrum(image, eigenvalues, semisimple, float(residual))

    # ----------------------
    # --- Joint spectrum ---
    # ----------------------

    @classmethod
    def joint_spectrum(
        cls,
        algebra: Algebra,
        elements: list[Element],
        chars: CharacterSet,
        seed: int | None = None,
        samples: int | None = None,
        dedup_radius: float | None = None,
    ) -> JointSpectrum:
        """
        SP(a_1, ..., a_n) = {(phi(a_1), ..., phi(a_n)) : phi in M(A)}.

        Explanation:
        Every tuple of the character image, plus `samples` seeded Gaussian perturbations
        of them, is classified again by the ideal-membership definition:
        lambda is in SP iff 1 is not in the ideal generated by {lambda_i 1 - a_i}.

        Raises:
            OracleDisagreement: if the two classifications differ for any tested tuple.
            NumericalFailure: if a tested tuple sits too close to the dedup radius to classify.

        """
        config = settings.GELFAND
        seed = config["DEFAULT_SEED"] if seed is None else seed
        samples = config["PERTURBATION_SAMPLES"] if samples is None else samples
        dedup_radius = config["DEDUP_RADIUS"] if dedup_radius is None else dedup_radius

        if not elements:
            raise ValueError("A joint spectrum needs at least one element.")
        for element in elements:
            if element.algebra_id != algebra.algebra_id:
                raise AlgebraMismatch(
                    f"Element of '{element.algebra_id}' in a tuple over '{algebra.algebra_id}'."
                )

        image = np.column_stack(
            [CharacterService.gelfand_transform(element, chars) for element in elements]
        )
        spectrum = SpectrumSet.from_points(
            image, dedup_radius, TUPLE, labels=range(len(chars)), width=len(elements)
        )

        residuals = {"member_residual_min": float("inf"), "nonmember_residual_max": 0.0}

        for point in spectrum:
            membership = IdealService.in_joint_spectrum(
                algebra, elements, point, radius=dedup_radius
            )
            residuals["member_residual_min"] = min(
                residuals["member_residual_min"], membership.residual
            )
            if membership.contains_unit:
                raise OracleDisagreement(
                    "Character image point generates the whole algebra.",
                    point=point,
                    residual=membership.residual,
                )

        rng = np.random.default_rng(seed)
        radius = config["PERTURBATION_RADIUS"]
        for _ in range(samples if len(spectrum) else 0):
            base = spectrum.points[rng.integers(len(spectrum))]
            point = base + radius * (
                rng.standard_normal(base.shape) + 1j * rng.standard_normal(base.shape)
            )
            membership = IdealService.in_joint_spectrum(
                algebra, elements, point, radius=dedup_radius
            )

            if membership.contains_unit:
                residuals["nonmember_residual_max"] = max(
                    residuals["nonmember_residual_max"], membership.residual
                )
            else:
                residuals["member_residual_min"] = min(
                    residuals["member_residual_min"], membership.residual
                )

            IdealService.check_agreement(
                not membership.contains_unit,
                spectrum.distance_to(point),
                dedup_radius,
                "Membership test and character image disagree on a perturbed tuple.",
                point=point,
                residual=membership.residual,
            )

        if residuals["member_residual_min"] == float("inf"):
            residuals["member_residual_min"] = 0.0

        logger.debug("Joint spectrum of %d tuple(s) cross-checked", len(spectrum) + samples)
        return JointSpectrum(spectrum, len(spectrum) + samples, residuals)
