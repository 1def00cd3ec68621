import logging

import numpy as np
import scipy.linalg
from django.conf import settings

from apps.algebra.models import Algebra, Character, CharacterSet, Element
from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.services.character_service import CharacterService
from apps.core.exceptions import (
    AlgebraMismatch,
    LiftFailure,
    NotAFunctionAlgebra,
    OracleDisagreement,
    SemisimplicityRequired,
)
from apps.core.models import ELEMENT, SpectrumSet
from apps.functions.models import (
    EVALUATION,
    GENERAL,
    ACharacter,
    Admissibility,
    AValuedFunction,
    AValuedSpectrum,
    ExtendedFunction,
    FiniteSpace,
    ScalarFunction,
    ScalarRestriction,
)
from apps.functions.services.function_service import FunctionService
from apps.functions.services.vv_spectrum_service import VectorSpectrumService

logger = logging.getLogger(__name__)


class ACharacterService:
    """A-characters of C(X, A), their lifting from C(X), and the A-valued spectrum."""

    @staticmethod
    def require_semisimple(algebra: Algebra, operation: str):
        if not AlgebraService.is_semisimple(algebra).semisimple:
            raise SemisimplicityRequired(operation)

    @staticmethod
    def reconstruct(chars: CharacterSet, targets: np.ndarray) -> tuple[np.ndarray, float]:
        """
        Solve phi(a) = t_phi for every character, one column of `targets` per unknown a.

        Returns:
            tuple: coefficient columns and the max-norm residual of the solve.

        """
        matrix = chars.matrix
        solution = np.linalg.lstsq(matrix, targets, rcond=None)[0]
        residual = float(np.max(np.abs(matrix @ solution - targets))) if targets.size else 0.0
        return solution, residual

    # -------------------------
    # --- Lifting characters ---
    # -------------------------

    @classmethod
    def lift_character(
        cls, psi: Character, algebra: Algebra, space: FiniteSpace, chars: CharacterSet
    ) -> ACharacter:
        """
        Lift a character psi of C(X) to the unique A-character Psi of C(X, A).

        Explanation:
        For each basis function b of C(X, A) (e_i at one point) Psi(b) is the unique a
        with phi(a) = psi(phi o b) for every phi in M(A), found by a linear solve against
        the character matrix. The assembled map is then checked to be a unital algebra
        homomorphism compatible with every phi.

        Raises:
            SemisimplicityRequired: the character matrix must be injective.
            LiftFailure: the solve is inconsistent, or a check fails.

        """
        config = settings.GELFAND
        cls.require_semisimple(algebra, "lift_character")

        frak = FunctionService.scalar_algebra(space)
        if psi.algebra_id != frak.algebra_id:
            raise AlgebraMismatch(f"psi is a character of '{psi.algebra_id}', not of '{frak.algebra_id}'.")

        cxa = FunctionService.make_cxa(algebra, space)
        dim, n = algebra.dim, space.size

        # column (x, i): psi(phi o b_{x,i}) = psi(delta_x) phi(e_i)
        targets = np.kron(psi.values[np.newaxis, :], chars.matrix)
        matrix, residual = cls.reconstruct(chars, targets)
        if residual > config["CERTIFICATE_TOL"]:
            raise LiftFailure("no solution", residual)

        residuals = {"solve": residual, **cls.__homomorphism_residuals(matrix, algebra, cxa, chars)}
        for reason in ("homomorphism", "unit", "compatibility"):
            if residuals[reason] > config["TOL"]:
                raise LiftFailure(reason, residuals[reason])

        for x, point in enumerate(space):
            evaluation = np.zeros((dim, n * dim), dtype=complex)
            evaluation[:, x * dim : (x + 1) * dim] = np.eye(dim)
            if np.max(np.abs(matrix - evaluation)) <= config["TOL"]:
                return ACharacter(matrix, EVALUATION, point, residuals)

        logger.info("Lift of psi=%s is not an evaluation", psi.values)
        return ACharacter(matrix, GENERAL, None, residuals)

    @staticmethod
    def __homomorphism_residuals(
        matrix: np.ndarray, algebra: Algebra, cxa: Algebra, chars: CharacterSet
    ) -> dict:
        dim = algebra.dim
        n = cxa.dim // dim

        # Psi(b_p b_q) against Psi(b_p) Psi(b_q)
        product_image = np.einsum("km,pqm->pqk", matrix, cxa.structure)
        image_product = np.einsum("ip,jq,ijk->pqk", matrix, matrix, algebra.structure)
        homomorphism = float(np.max(np.abs(product_image - image_product)))

        unit = float(np.max(np.abs(matrix @ cxa.unit - algebra.unit)))

        # phi(Psi b) 1 against Psi((phi o b) 1), over every phi and basis function b
        phi_of_image = chars.matrix @ matrix
        unit_images = np.stack(
            [matrix[:, x * dim : (x + 1) * dim] @ algebra.unit for x in range(n)], axis=1
        )
        compatibility = 0.0
        for row, phi in enumerate(chars.matrix):
            for x in range(n):
                for i in range(dim):
                    column = x * dim + i
                    lhs = phi_of_image[row, column] * algebra.unit
                    rhs = phi[i] * unit_images[:, x]
                    compatibility = max(compatibility, float(np.max(np.abs(lhs - rhs))))

        return {"homomorphism": homomorphism, "unit": unit, "compatibility": compatibility}

    @classmethod
    def enumerate_a_characters(
        cls,
        algebra: Algebra,
        space: FiniteSpace,
        chars: CharacterSet | None = None,
        seed: int | None = None,
    ) -> list[ACharacter]:
        """
        Lift every character of C(X) and return the A-characters of C(X, A), in point order.

        Raises:
            OracleDisagreement: if some lift is not an evaluation, or two lifts coincide.

        """
        chars = chars or CharacterService.characters(algebra, seed=seed)
        frak_chars = FunctionService.scalar_characters(space, seed=seed)

        lifts = [cls.lift_character(psi, algebra, space, chars) for psi in frak_chars]
        general = [i for i, lift in enumerate(lifts) if lift.kind != EVALUATION]
        if general:
            raise OracleDisagreement(
                "A character of C(X) lifts to a non-evaluation A-character.",
                psi=frak_chars[general[0]].values,
            )

        points = [lift.point for lift in lifts]
        if sorted(points, key=space.index) != list(space.points):
            raise OracleDisagreement(
                "Lifted A-characters do not match the evaluations one to one.", points=points
            )
        return sorted(lifts, key=lambda lift: space.index(lift.point))

    @staticmethod
    def scalar_restriction(a_character: ACharacter, algebra: Algebra, space: FiniteSpace) -> ScalarRestriction:
        """psi = Psi on scalar functions: Psi(delta_x 1) = psi(delta_x) 1."""

        dim = algebra.dim
        unit = algebra.unit
        values, worst = [], 0.0
        for x in range(space.size):
            image = a_character.matrix[:, x * dim : (x + 1) * dim] @ unit
            value = np.vdot(unit, image) / np.vdot(unit, unit)
            values.append(value)
            worst = max(worst, float(np.max(np.abs(image - value * unit))))

        frak = FunctionService.scalar_algebra(space)
        values = np.array(values, dtype=complex)
        character = Character(values, frak.algebra_id, CharacterService.residual(frak, values))
        return ScalarRestriction(character, worst)

    # --------------------------
    # --- Extension of f~ ---
    # --------------------------

    @classmethod
    def extend_function(
        cls,
        f: AValuedFunction,
        chars: CharacterSet,
        frak_chars: CharacterSet | None = None,
    ) -> ExtendedFunction:
        """F(psi) = the unique a with phi(a) = psi(phi o f) for every phi, one per psi in M(C(X))."""

        cls.require_semisimple(f.algebra, "extend_function")
        frak_chars = frak_chars or FunctionService.scalar_characters(f.space, seed=chars.seed)

        table = FunctionService.f_tilde(f, chars).table
        targets = table @ frak_chars.matrix.T
        solution, residual = cls.reconstruct(chars, targets)
        return ExtendedFunction(
            tuple(Element(column, f.algebra) for column in solution.T), residual
        )

    @classmethod
    def lifting_criterion(cls, space: FiniteSpace, seed: int | None = None) -> tuple[bool, float]:
        """
        Check ||g^|| = ||g|| on the point idempotents of C(X), the uniform-algebra condition
        under which every character of C(X) lifts.
        """

        frak = FunctionService.scalar_algebra(space)
        frak_chars = CharacterService.characters(frak, seed=seed)
        residual = 0.0
        for g in frak.basis():
            transform = np.max(np.abs(CharacterService.gelfand_transform(g, frak_chars)))
            residual = max(residual, abs(float(transform) - AlgebraService.norm(g)))
        return residual <= settings.GELFAND["TOL"], residual

    # ---------------------------
    # --- A-valued spectrum ---
    # ---------------------------

    @classmethod
    def a_valued_spectrum(
        cls,
        f: AValuedFunction,
        chars: CharacterSet,
        frak_chars: CharacterSet | None = None,
        dedup_radius: float | None = None,
    ) -> AValuedSpectrum:
        """
        SP_A(f) = {a in A : a^ in SP(f~)}, with f~ the C(X)-valued function phi -> phi o f.

        Explanation:
        SP(f~) is computed from the characters psi of C(X) and each member is confirmed by
        ideal membership in C(X). Every member mu is pulled back to the a with phi(a) = mu(phi);
        members without such an a are dropped. The chain f(X), {Psi(f)}, SP_A(f) is then
        checked for inclusion, and for equality of the last two since every psi lifts here.

        Raises:
            SemisimplicityRequired: if A is not semisimple.
            OracleDisagreement: if an inclusion of the chain fails.

        """
        config = settings.GELFAND
        dedup_radius = config["DEDUP_RADIUS"] if dedup_radius is None else dedup_radius
        algebra = f.algebra
        cls.require_semisimple(algebra, "a_valued_spectrum")
        frak_chars = frak_chars or FunctionService.scalar_characters(f.space, seed=chars.seed)

        tilde = FunctionService.f_tilde_function(f, chars)
        tilde_spectrum = VectorSpectrumService.vv_spectrum_chars(tilde, frak_chars, dedup_radius)
        for mu in tilde_spectrum:
            VectorSpectrumService.vv_spectrum_membership(
                tilde, ScalarFunction(tilde.space, mu), frak_chars, dedup_radius
            )

        elements = []
        solve_residual = 0.0
        for mu in tilde_spectrum:
            solution, residual = cls.reconstruct(chars, mu[:, np.newaxis])
            if residual > config["CERTIFICATE_TOL"]:
                logger.info("SP(f~) member with no preimage in A (residual %.3e)", residual)
                continue
            solve_residual = max(solve_residual, residual)
            elements.append(solution[:, 0])

        def distance(difference):
            return AlgebraService.coeffs_norm(algebra, difference)

        spectrum = SpectrumSet.from_points(elements, dedup_radius, ELEMENT, distance=distance, width=algebra.dim)
        image = SpectrumSet.from_points(f.values, dedup_radius, ELEMENT, distance=distance)
        lifts = cls.enumerate_a_characters(algebra, f.space, chars, seed=chars.seed)
        lifted = SpectrumSet.from_points(
            [lift.apply(f.as_coeffs()) for lift in lifts],
            dedup_radius,
            ELEMENT,
            labels=[lift.point for lift in lifts],
            distance=distance,
        )

        residuals = {
            "reconstruction": solve_residual,
            "image_in_lifted": max((lifted.distance_to(p) for p in image), default=0.0),
            "lifted_in_spectrum": max((spectrum.distance_to(p) for p in lifted), default=0.0),
            "spectrum_in_lifted": max((lifted.distance_to(p) for p in spectrum), default=0.0),
        }
        for name, value in residuals.items():
            if name != "reconstruction" and value > dedup_radius:
                raise OracleDisagreement(
                    "Inclusion chain f(X), {Psi(f)}, SP_A(f) fails.",
                    inclusion=name,
                    residual=value,
                )

        return AValuedSpectrum(spectrum, image, lifted, residuals)

    # ---------------------
    # --- Admissibility ---
    # ---------------------

    @classmethod
    def is_admissible(
        cls,
        generators: list[AValuedFunction],
        chars: CharacterSet,
        include_constants: bool = True,
        tol: float | None = None,
    ) -> Admissibility:
        """
        Whether the subalgebra generated by `generators` is closed under f -> (phi o f) 1.

        Args:
            generators (list): functions spanning the subalgebra.
            chars (CharacterSet): M(A).
            include_constants (bool): add every constant function to the generators.
            tol (float): membership tolerance, relative to the norm of phi o f.

        Raises:
            NotAFunctionAlgebra: the subalgebra misses the constants or does not separate points.

        """
        config = settings.GELFAND
        tol = config["TOL"] if tol is None else tol
        if not generators:
            raise NotAFunctionAlgebra("generators", "No generating functions given.")
        first = generators[0]
        for g in generators[1:]:
            first.check_compatible(g)

        algebra, space = first.algebra, first.space
        cxa = FunctionService.make_cxa(algebra, space)
        constants = [np.tile(e, space.size) for e in np.eye(algebra.dim, dtype=complex)]

        vectors = [g.as_coeffs().astype(complex) for g in generators]
        if include_constants:
            vectors.extend(constants)
        basis = cls.__closure(np.column_stack(vectors), cxa, config["RANK_TOL"])

        def distance_to_closure(vector):
            projected = basis @ (basis.conj().T @ vector)
            return float(np.linalg.norm(vector - projected))

        missing = max(distance_to_closure(c) for c in constants)
        if missing > tol:
            raise NotAFunctionAlgebra("constants", f"Constant functions are missing (residual {missing:.3e}).")

        dim = algebra.dim
        for x in range(space.size):
            for y in range(x + 1, space.size):
                gap = basis[x * dim : (x + 1) * dim] - basis[y * dim : (y + 1) * dim]
                if np.max(np.abs(gap), initial=0.0) <= tol:
                    raise NotAFunctionAlgebra(
                        "separates points",
                        f"No function tells {space.points[x]} from {space.points[y]}.",
                    )

        residual = 0.0
        for g in generators:
            for character in chars:
                composed = FunctionService.compose(character, g)
                embedded = FunctionService.embed_scalar(composed, algebra).as_coeffs()
                scale = max(1.0, float(np.linalg.norm(embedded)))
                residual = max(residual, distance_to_closure(embedded) / scale)

        return Admissibility(residual <= tol, residual, basis.shape[1])

    @staticmethod
    def __closure(vectors: np.ndarray, cxa: Algebra, rank_tol: float) -> np.ndarray:
        """Orthonormal basis of the subalgebra generated by the columns of `vectors`."""

        basis = scipy.linalg.orth(vectors, rcond=rank_tol)
        while True:
            products = np.einsum("pa,qb,pqk->kab", basis, basis, cxa.structure, optimize=True)
            grown = scipy.linalg.orth(
                np.hstack([basis, products.reshape(cxa.dim, -1)]), rcond=rank_tol
            )
            if grown.shape[1] == basis.shape[1]:
                return grown
            basis = grown
