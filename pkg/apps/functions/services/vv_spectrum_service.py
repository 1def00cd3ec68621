import logging

import numpy as np
from django.conf import settings

from apps.algebra.models import CharacterSet, Element
from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.services.ideal_service import IdealService
from apps.core.exceptions import NumericalFailure, OracleDisagreement
from apps.core.models import FUNCTION, SpectrumSet
from apps.functions.models import (
    AValuedFunction,
    Certificate,
    InSpectrum,
    ScalarFunction,
    SpectrumMembership,
)
from apps.functions.services.function_service import FunctionService

logger = logging.getLogger(__name__)


class VectorSpectrumService:
    """
    The vector-valued spectrum SP(f) of a function on a finite space, by two methods:
    character images {phi o f} and the ideal generated by {lambda(x) 1 - f(x)}.
    """

    # ------------------------
    # --- Character images ---
    # ------------------------

    @staticmethod
    def vv_spectrum_chars(
        f: AValuedFunction, chars: CharacterSet, dedup_radius: float | None = None
    ) -> SpectrumSet:
        dedup_radius = settings.GELFAND["DEDUP_RADIUS"] if dedup_radius is None else dedup_radius
        tilde = FunctionService.f_tilde(f, chars)
        return SpectrumSet.from_points(
            tilde.table, dedup_radius, FUNCTION, labels=range(len(chars)), width=f.space.size
        )

    # ------------------
    # --- Membership ---
    # ------------------

    @staticmethod
    def generators(f: AValuedFunction, lam: ScalarFunction) -> list[Element]:
        """lambda(x) 1 - f(x) for every x in X."""

        FunctionService.check_same_space(f, lam)
        return [
            f.algebra.scalar(lam.values[index]) - value
            for index, value in enumerate(f.elements())
        ]

    @classmethod
    def vv_spectrum_membership(
        cls,
        f: AValuedFunction,
        lam: ScalarFunction,
        chars: CharacterSet | None = None,
        dedup_radius: float | None = None,
    ) -> SpectrumMembership:
        """
        lambda is in SP(f) iff 1 is outside the ideal generated by {lambda(x) 1 - f(x) : x in X}.

        Explanation:
        Taking every point of X at once suffices: the ideal over X contains the ideal
        over any subset. Singular values up to the dedup radius count as zero, so both
        methods decide on the same scale. When `chars` is given the verdict is compared
        with the character image through `IdealService.check_agreement`.

        """
        dedup_radius = settings.GELFAND["DEDUP_RADIUS"] if dedup_radius is None else dedup_radius
        span = IdealService.ideal_span(f.algebra, cls.generators(f, lam), radius=dedup_radius)
        membership = IdealService.contains_unit(span, f.algebra)
        in_spectrum = not membership.contains_unit

        if chars is None:
            return SpectrumMembership(in_spectrum, membership.residual)

        distance = cls.vv_spectrum_chars(f, chars, dedup_radius).distance_to(lam.values)
        IdealService.check_agreement(
            in_spectrum,
            distance,
            dedup_radius,
            "Ideal membership and character image disagree on lambda.",
            lam=lam.values,
            residual=membership.residual,
        )
        return SpectrumMembership(in_spectrum, membership.residual, distance)

    # -------------------
    # --- Certificate ---
    # -------------------

    @classmethod
    def certificate(
        cls, f: AValuedFunction, lam: ScalarFunction, chars: CharacterSet
    ) -> Certificate | InSpectrum:
        """
        Prove lambda not in SP(f) with points x_i and coefficients a_i, or name the character
        that puts it in SP(f).

        Explanation:
        The system sum_x a_x (lambda(x) 1 - f(x)) = 1 is linear in (a_x): its matrix is
        [L_{g_x1} | L_{g_x2} | ...]. It is solved by least squares, points with coefficient
        norm below the prune tolerance are dropped, and the rest are pruned greedily while
        the residual stays certified. The final residual is recomputed with algebra
        products, independently of the solver.

        Raises:
            NumericalFailure: residual inside the ambiguous zone (CERTIFICATE_TOL, AMBIGUOUS_UPPER).
            OracleDisagreement: membership says "not in SP(f)" but no certificate exists.

        """
        config = settings.GELFAND
        membership = cls.vv_spectrum_membership(f, lam, chars)

        if membership.in_spectrum:
            image = cls.vv_spectrum_chars(f, chars)
            index = image.labels[image.nearest(lam.values)]
            return InSpectrum(chars[index], index, membership.distance, membership.residual)

        generators = cls.generators(f, lam)
        points = list(range(f.space.size))

        coefficients, residual = cls.__solve(f, generators, points)
        norms = [AlgebraService.coeffs_norm(f.algebra, c) for c in coefficients]
        kept = [x for x, norm in zip(points, norms) if norm >= config["PRUNE_TOL"]]
        if kept and len(kept) < len(points):
            kept_coefficients, kept_residual = cls.__solve(f, generators, kept)
            if kept_residual <= max(residual, config["CERTIFICATE_TOL"]):
                points, coefficients = kept, kept_coefficients

        # greedy pruning, smallest coefficients first
        order = sorted(
            points,
            key=lambda x: AlgebraService.coeffs_norm(f.algebra, coefficients[points.index(x)]),
        )
        for x in order:
            if len(points) == 1:
                break
            trial = [p for p in points if p != x]
            trial_coefficients, trial_residual = cls.__solve(f, generators, trial)
            if trial_residual <= config["CERTIFICATE_TOL"]:
                points, coefficients = trial, trial_coefficients

        elements = [Element(c, f.algebra) for c in coefficients]
        residual = cls.certificate_residual(elements, [generators[x] for x in points])

        if residual > config["CERTIFICATE_TOL"]:
            if residual < config["AMBIGUOUS_UPPER"]:
                raise NumericalFailure(residual, "Certificate residual in the ambiguous zone.")
            raise OracleDisagreement(
                "Membership test excludes lambda but no certificate exists.",
                lam=lam.values,
                residual=residual,
            )

        return Certificate(
            points=tuple(f.space.points[x] for x in points),
            coefficients=tuple(elements),
            residual=residual,
            norm_sum=sum(AlgebraService.norm(a) for a in elements),
        )

    @staticmethod
    def __solve(f: AValuedFunction, generators: list[Element], points: list[int]):
        matrix = np.hstack([AlgebraService.regular_repr(generators[x]) for x in points])
        solution = np.linalg.lstsq(matrix, f.algebra.unit, rcond=None)[0]
        residual = AlgebraService.coeffs_norm(f.algebra, matrix @ solution - f.algebra.unit)
        return solution.reshape(len(points), f.algebra.dim), residual

    @staticmethod
    def certificate_residual(coefficients: list[Element], generators: list[Element]) -> float:
        """||1 - sum_i a_i g_i|| evaluated with algebra products."""

        algebra = coefficients[0].algebra
        total = algebra.zero()
        for a, g in zip(coefficients, generators):
            total = total + AlgebraService.mul(a, g)
        return AlgebraService.norm(algebra.one() - total)

    @classmethod
    def verify_certificate(cls, f: AValuedFunction, lam: ScalarFunction, certificate: Certificate) -> float:
        """Recompute a certificate's residual from the function and lambda alone."""

        generators = cls.generators(f, lam)
        return cls.certificate_residual(
            list(certificate.coefficients),
            [generators[f.space.index(x)] for x in certificate.points],
        )

    # --------------------
    # --- Cross-check ---
    # --------------------

    @classmethod
    def cross_check(
        cls,
        f: AValuedFunction,
        chars: CharacterSet,
        seed: int | None = None,
        samples: int | None = None,
        dedup_radius: float | None = None,
    ) -> dict:
        """
        Classify every phi o f and seeded perturbations of them by both methods, and certify
        every non-member.

        Returns:
            dict: residuals and counts; any disagreement raises `OracleDisagreement`.

        """
        config = settings.GELFAND
        seed = config["DEFAULT_SEED"] if seed is None else seed
        samples = config["PERTURBATION_SAMPLES"] if samples is None else samples
        dedup_radius = config["DEDUP_RADIUS"] if dedup_radius is None else dedup_radius

        image = cls.vv_spectrum_chars(f, chars, dedup_radius)
        rng = np.random.default_rng(seed)
        candidates = list(image.points)
        for _ in range(samples if len(image) else 0):
            base = image.points[rng.integers(len(image))]
            candidates.append(
                base
                + config["PERTURBATION_RADIUS"]
                * (rng.standard_normal(base.shape) + 1j * rng.standard_normal(base.shape))
            )

        summary = {
            "checked": 0,
            "members": 0,
            "certified": 0,
            "member_residual_min": float("inf"),
            "certificate_residual_max": 0.0,
        }
        for values in candidates:
            lam = ScalarFunction(f.space, values)
            membership = cls.vv_spectrum_membership(f, lam, chars, dedup_radius)
            summary["checked"] += 1

            if membership.in_spectrum:
                summary["members"] += 1
                summary["member_residual_min"] = min(
                    summary["member_residual_min"], membership.residual
                )
                continue

            certificate = cls.certificate(f, lam, chars)
            residual = cls.verify_certificate(f, lam, certificate)
            summary["certified"] += 1
            summary["certificate_residual_max"] = max(summary["certificate_residual_max"], residual)

        if summary["member_residual_min"] == float("inf"):
            summary["member_residual_min"] = 0.0
        logger.debug("Cross-checked %d candidates for SP(f)", summary["checked"])
        return summary
