import logging

import numpy as np
from django.conf import settings

from apps.algebra.models import Algebra, Character
from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.services.character_service import CharacterService
from apps.core.exceptions import AlgebraMismatch, DimensionMismatch, OracleDisagreement
from apps.functions.models import AValuedFunction, FiniteMetric, LipschitzSummary, ScalarFunction
from apps.functions.services.function_service import FunctionService

logger = logging.getLogger(__name__)

SAMPLE_ELEMENTS = 64


class LipschitzService:
    """Lip(X, A) over a finite metric space: L(f), the Lipschitz norm and naturalness of Lip(X)."""

    @staticmethod
    def check_space(f, metric: FiniteMetric):
        if f.space != metric.space:
            raise DimensionMismatch("Function and metric live on different spaces.")

    @classmethod
    def lip_constant(cls, f: AValuedFunction, metric: FiniteMetric) -> float:
        """L(f) = max over x != y of ||f(x) - f(y)|| / rho(x, y); 0 on a one-point space."""

        cls.check_space(f, metric)
        return max(
            (
                AlgebraService.coeffs_norm(f.algebra, f.values[i] - f.values[j]) / distance
                for i, j, distance in metric.pairs()
            ),
            default=0.0,
        )

    @classmethod
    def lip_norm(cls, f: AValuedFunction, metric: FiniteMetric) -> float:
        return FunctionService.uniform_norm(f) + cls.lip_constant(f, metric)

    @classmethod
    def summary(cls, f: AValuedFunction, metric: FiniteMetric) -> LipschitzSummary:
        uniform = FunctionService.uniform_norm(f)
        constant = cls.lip_constant(f, metric)
        return LipschitzSummary(uniform, constant, uniform + constant)

    @classmethod
    def scalar_lip_constant(cls, lam: ScalarFunction, metric: FiniteMetric) -> float:
        cls.check_space(lam, metric)
        return max(
            (abs(lam.values[i] - lam.values[j]) / distance for i, j, distance in metric.pairs()),
            default=0.0,
        )

    @classmethod
    def scalar_lip_norm(cls, lam: ScalarFunction, metric: FiniteMetric) -> float:
        return lam.sup_norm() + cls.scalar_lip_constant(lam, metric)

    # --------------------
    # --- Naturalness ---
    # --------------------

    @staticmethod
    def lip_natural_check(metric: FiniteMetric, alg_scalar: Algebra | None = None, seed: int | None = None) -> bool:
        """
        Every character of Lip(X) = C^X is a point evaluation, and every evaluation is a character.

        Raises:
            OracleDisagreement: a computed character is not an evaluation, or the matching
                is not one to one.

        """
        space = metric.space
        alg_scalar = alg_scalar or FunctionService.scalar_algebra(space)
        if alg_scalar.dim != space.size:
            raise AlgebraMismatch(
                f"Lip(X) on {space.size} points needs dimension {space.size}, got {alg_scalar.dim}."
            )

        chars = CharacterService.characters(alg_scalar, seed=seed)
        radius = settings.GELFAND["DEDUP_RADIUS"]
        evaluations = np.eye(space.size)
        matched = []
        for character in chars:
            gaps = np.max(np.abs(evaluations - character.values), axis=1)
            point = int(np.argmin(gaps))
            if gaps[point] > radius:
                raise OracleDisagreement(
                    "Character of Lip(X) is not a point evaluation.",
                    values=character.values,
                    residual=float(gaps[point]),
                )
            matched.append(point)

        if sorted(matched) != list(range(space.size)):
            raise OracleDisagreement(
                "Characters and point evaluations are not in bijection.",
                matched=[space.points[i] for i in matched],
            )
        return True

    # -----------------------
    # --- Functional norm ---
    # -----------------------

    @staticmethod
    def functional_norm(
        character: Character, algebra: Algebra, seed: int | None = None, samples: int = SAMPLE_ELEMENTS
    ) -> float:
        """
        Sampled ||phi|| = sup |phi(a)| / ||a||, over the unit, the basis and seeded random elements.

        Note: a lower estimate of the true operator norm; with the regular-representation
        norm every character has norm 1, attained at the unit.

        """
        seed = settings.GELFAND["DEFAULT_SEED"] if seed is None else seed
        rng = np.random.default_rng(seed)
        candidates = [algebra.unit, *np.eye(algebra.dim)]
        candidates.extend(
            rng.standard_normal(algebra.dim) + 1j * rng.standard_normal(algebra.dim)
            for _ in range(samples)
        )

        best = 0.0
        for coeffs in candidates:
            norm = AlgebraService.coeffs_norm(algebra, coeffs)
            if norm > 0:
                best = max(best, abs(complex(character.values @ coeffs)) / norm)
        return best

    @classmethod
    def composition_bounds(cls, f: AValuedFunction, metric: FiniteMetric, chars, seed: int | None = None) -> dict:
        """
        L(phi o f) <= ||phi|| L(f) for every phi in M(A).

        Returns:
            dict: worst excess max(0, L(phi o f) - ||phi|| L(f)) and the largest ratio seen.

        """
        constant = cls.lip_constant(f, metric)
        excess, ratio = 0.0, 0.0
        for character in chars:
            composed = cls.scalar_lip_constant(FunctionService.compose(character, f), metric)
            kappa = cls.functional_norm(character, f.algebra, seed=seed)
            excess = max(excess, composed - kappa * constant)
            if constant > 0:
                ratio = max(ratio, composed / constant)
        return {"excess": max(excess, 0.0), "ratio": ratio}
