import logging

import numpy as np
import scipy.linalg
from django.conf import settings

from apps.algebra.models import Algebra, Character, CharacterSet, Element
from apps.algebra.services.algebra_service import AlgebraService
from apps.core.exceptions import AlgebraMismatch, CharacterSolveFailure

logger = logging.getLogger(__name__)


class CharacterService:
    """Compute the character space M(A) and the Gelfand transform."""

    # ------------------
    # --- Characters ---
    # ------------------

    @classmethod
    def characters(
        cls,
        algebra: Algebra,
        tol: float | None = None,
        seed: int | None = None,
        dedup_radius: float | None = None,
    ) -> CharacterSet:
        """
        Compute every character of `algebra` up to `dedup_radius`.

        Explanation:
        Draw a seeded random element g and eigen-decompose the transpose of L_g. Every
        character is a left eigenvector of L_g (phi(g x) = phi(g) phi(x)); each eigenvector
        is normalised so that phi(1) = 1 and polished by damped Newton on the
        multiplicativity system. Colliding eigenvalues trigger a retry with a fresh seed.
        When every retry collides the collision is structural (a nonzero radical), and each
        eigenvalue cluster contributes the normalised trace of the algebra acting on its
        invariant subspace instead.

        Args:
            algebra (Algebra): a validated algebra.
            tol (float): residual a refined candidate must reach to count as a character.
            seed (int): seed of the random generic element.
            dedup_radius (float): sup-distance under which two candidates are merged.

        Returns:
            CharacterSet: characters ordered lexicographically by value vector.

        Raises:
            CharacterSolveFailure: if no candidate reaches `tol`.

        """
        config = settings.GELFAND
        tol = config["TOL"] if tol is None else tol
        seed = config["DEFAULT_SEED"] if seed is None else seed
        dedup_radius = config["DEDUP_RADIUS"] if dedup_radius is None else dedup_radius
        attempts = config["CHARACTER_RETRIES"] + 1

        rng = np.random.default_rng(seed)
        for attempt in range(attempts):
            generic = algebra.element(cls.__random_coeffs(rng, algebra.dim))
            matrix = AlgebraService.regular_repr(generic)
            eigenvalues, left_vectors = np.linalg.eig(matrix.T)

            clusters = cls.__cluster(eigenvalues, config["COLLISION_TOL"])
            collided = any(len(cluster) > 1 for cluster in clusters)

            if collided and attempt < attempts - 1:
                logger.debug("Eigenvalues of L_g collide (attempt %d), reseeding", attempt)
                continue

            if collided:
                logger.warning(
                    "Eigenvalue collisions persist on '%s'; using cluster traces",
                    algebra.algebra_id,
                )
                candidates = [
                    cls.__cluster_trace(algebra, matrix, eigenvalues, cluster)
                    for cluster in clusters
                ]
            else:
                candidates = cls.__normalised_candidates(algebra, left_vectors)
            break

        kept, worst = [], 0.0
        for candidate in candidates:
            if candidate is None:
                continue
            values, residual = cls.refine(algebra, candidate)
            worst = max(worst, residual)
            if residual <= tol:
                kept.append(Character(values, algebra.algebra_id, residual))
            else:
                logger.debug("Dropped candidate with residual %.3e", residual)

        if not kept:
            raise CharacterSolveFailure(worst, attempts)

        return CharacterSet(
            characters=cls.__dedup(kept, dedup_radius),
            dedup_radius=dedup_radius,
            algebra=algebra,
            seed=seed,
        )

    @staticmethod
    def __random_coeffs(rng: np.random.Generator, dim: int) -> np.ndarray:
        return rng.standard_normal(dim) + 1j * rng.standard_normal(dim)

    @staticmethod
    def __cluster(eigenvalues: np.ndarray, collision_tol: float) -> list[list[int]]:
        """Group indices of eigenvalues that lie within the collision tolerance."""

        clusters = []
        for index, value in enumerate(eigenvalues):
            scale = max(1.0, abs(value))
            for cluster in clusters:
                if abs(eigenvalues[cluster[0]] - value) < collision_tol * scale:
                    cluster.append(index)
                    break
            else:
                clusters.append([index])
        return clusters

    @staticmethod
    def __normalised_candidates(algebra: Algebra, left_vectors: np.ndarray) -> list:
        candidates = []
        for column in left_vectors.T:
            at_unit = column @ algebra.unit
            # eigenvectors vanishing on 1 are not multiples of a character
            if abs(at_unit) < 1e-8 * np.linalg.norm(column):
                candidates.append(None)
                continue
            candidates.append(column / at_unit)
        return candidates

    @staticmethod
    def __cluster_trace(
        algebra: Algebra, matrix: np.ndarray, eigenvalues: np.ndarray, cluster: list[int]
    ) -> np.ndarray:
        """
        Character candidate of one eigenvalue cluster.

        Note:
            The invariant subspace of L_g for the cluster is an ideal on which every
            L_x acts as phi(x) plus a nilpotent, so phi(x) is the normalised trace.

        """
        center = np.mean(eigenvalues[cluster])
        spread = np.max(np.abs(eigenvalues[cluster] - center))
        radius = spread + settings.GELFAND["COLLISION_TOL"] * max(1.0, abs(center))

        _, vectors, size = scipy.linalg.schur(
            matrix.astype(complex),
            output="complex",
            sort=lambda z: abs(z - center) <= radius,
        )
        basis = vectors[:, :size]
        representations = np.einsum("ijk->ikj", algebra.structure)
        restricted = np.einsum("ab,ibc,cd->iad", basis.conj().T, representations, basis)
        return np.trace(restricted, axis1=1, axis2=2) / size

    @classmethod
    def refine(cls, algebra: Algebra, values: np.ndarray) -> tuple[np.ndarray, float]:
        """
        Polish a candidate with damped Gauss-Newton steps.

        The unknowns are phi(e_i); the equations are
        phi(e_i) phi(e_j) = sum_k c[i, j, k] phi(e_k) and phi(1) = 1.

        Returns:
            tuple: refined values and their max-norm residual.

        """
        values = np.asarray(values, dtype=complex).copy()
        residual = cls.__equations(algebra, values)
        identity = np.eye(algebra.dim)
        floor = 1e-14 * max(1.0, float(np.max(np.abs(algebra.structure))))

        for _ in range(settings.GELFAND["NEWTON_MAX_ITER"]):
            if np.max(np.abs(residual)) <= floor:
                break

            jacobian = np.vstack(
                [
                    (
                        np.einsum("im,j->ijm", identity, values)
                        + np.einsum("jm,i->ijm", identity, values)
                        - algebra.structure
                    ).reshape(algebra.dim**2, algebra.dim),
                    algebra.unit[np.newaxis, :],
                ]
            )
            step = np.linalg.lstsq(jacobian, -residual, rcond=None)[0]

            # halve the step until the residual norm decreases
            damping, current = 1.0, np.linalg.norm(residual)
            while damping > 1 / 64:
                trial = values + damping * step
                trial_residual = cls.__equations(algebra, trial)
                if np.linalg.norm(trial_residual) < current:
                    values, residual = trial, trial_residual
                    break
                damping /= 2
            else:
                logger.debug("Newton stalled at residual %.3e", current)
                break

        return values, float(np.max(np.abs(residual)))

    @classmethod
    def residual(cls, algebra: Algebra, values: np.ndarray) -> float:
        """Max-norm multiplicativity and unit residual of a value vector."""

        return float(np.max(np.abs(cls.__equations(algebra, np.asarray(values, dtype=complex)))))

    @staticmethod
    def __equations(algebra: Algebra, values: np.ndarray) -> np.ndarray:
        multiplicativity = np.outer(values, values) - algebra.structure @ values
        return np.concatenate([multiplicativity.ravel(), [values @ algebra.unit - 1]])

    @staticmethod
    def __dedup(characters: list[Character], radius: float) -> tuple:
        characters = sorted(
            characters,
            key=lambda c: tuple(
                v for z in c.values for v in (round(z.real, 9), round(z.imag, 9))
            ),
        )
        kept = []
        for character in characters:
            if all(np.max(np.abs(character.values - k.values)) > radius for k in kept):
                kept.append(character)
        return tuple(kept)

    @staticmethod
    def corrupt_characters(chars: CharacterSet) -> CharacterSet:
        """Test hook: scale every value vector by (1 + 0.5i) so that the oracles disagree."""

        corrupted = tuple(
            Character(c.values * (1 + 0.5j), c.algebra_id, c.residual) for c in chars
        )
        return CharacterSet(corrupted, chars.dedup_radius, chars.algebra, chars.seed)

    # ------------------------
    # --- Gelfand transform ---
    # ------------------------

    @staticmethod
    def gelfand_transform(a: Element, chars: CharacterSet) -> np.ndarray:
        """a^(phi) = sum_i a_i phi(e_i), tabulated in the order of `chars`."""

        if a.algebra_id != chars.algebra_id:
            raise AlgebraMismatch(
                f"Element of '{a.algebra_id}' against characters of '{chars.algebra_id}'."
            )
        return chars.matrix @ a.coeffs

    @staticmethod
    def characters_separate_points(chars: CharacterSet, rank_tol: float | None = None) -> bool:
        """True iff a -> (phi(a))_phi is injective, i.e. the character matrix has full column rank."""

        rank_tol = settings.GELFAND["RANK_TOL"] if rank_tol is None else rank_tol
        matrix = chars.matrix
        if matrix.shape[0] < matrix.shape[1]:
            return False
        singular_values = np.linalg.svd(matrix, compute_uv=False)
        return bool(singular_values[-1] > rank_tol * singular_values[0])
