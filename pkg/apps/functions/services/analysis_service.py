import logging

import numpy as np
from django.conf import settings

from apps.algebra.models import Algebra, CharacterSet, Element
from apps.algebra.services.character_service import CharacterService
from apps.core.exceptions import AlgebraMismatch, AnalysisAssertionFailure, InputError
from apps.core.models import Report, SpectrumSet
from apps.core.services.report_service import ReportService
from apps.functions.models import AValuedFunction, Certificate, FiniteMetric, ScalarFunction
from apps.functions.services.function_service import FunctionService
from apps.functions.services.lipschitz_service import LipschitzService
from apps.functions.services.vv_spectrum_service import VectorSpectrumService

logger = logging.getLogger(__name__)

BOUND_SLACK = 1e-12


class AnalysisService:
    """Perturbation experiments around f -> SP(f): equicontinuity, compactness, semicontinuity."""

    # ------------------------
    # --- Equicontinuity ---
    # ------------------------

    @staticmethod
    def equicontinuity_modulus(
        family: list[AValuedFunction],
        metric: FiniteMetric,
        chars: CharacterSet | None = None,
        seed: int | None = None,
    ) -> float:
        """
        omega = max over the family and x != y of ||f(x) - f(y)|| / rho(x, y).

        The transferred family {phi o f} is checked against kappa_phi omega, kappa_phi the
        sampled norm of phi.

        Raises:
            AnalysisAssertionFailure: if some phi o f breaks the transferred bound.

        """
        if not family:
            raise InputError("The family is empty.")
        for f in family[1:]:
            family[0].check_compatible(f)

        chars = chars or CharacterService.characters(family[0].algebra, seed=seed)
        omega = max(LipschitzService.lip_constant(f, metric) for f in family)

        for index, character in enumerate(chars):
            kappa = LipschitzService.functional_norm(character, family[0].algebra, seed=seed)
            transferred = max(
                LipschitzService.scalar_lip_constant(FunctionService.compose(character, f), metric)
                for f in family
            )
            if transferred > kappa * omega + BOUND_SLACK:
                raise AnalysisAssertionFailure(
                    "Transferred family exceeds the equicontinuity bound.",
                    character=index,
                    transferred=transferred,
                    bound=kappa * omega,
                )
        return omega

    # ---------------------------------
    # --- Upper semicontinuity run ---
    # ---------------------------------

    @staticmethod
    def random_direction(
        f: AValuedFunction, rng: np.random.Generator, directions: list[Element] | None = None
    ) -> AValuedFunction:
        """A complex Gaussian g with ||g||_X = 1, optionally inside span(directions) pointwise."""

        n, dim = f.space.size, f.algebra.dim
        if directions:
            weights = rng.standard_normal((n, len(directions))) + 1j * rng.standard_normal(
                (n, len(directions))
            )
            values = weights @ np.vstack([d.coeffs for d in directions])
        else:
            values = rng.standard_normal((n, dim)) + 1j * rng.standard_normal((n, dim))

        g = AValuedFunction(f.space, f.algebra, values)
        norm = FunctionService.uniform_norm(g)
        return g if norm == 0 else g * (1 / norm)

    @classmethod
    def usc_experiment(
        cls,
        algebra: Algebra,
        f: AValuedFunction,
        n_steps: int = 10,
        decay: float = 0.5,
        seed: int | None = None,
        directions: list[Element] | None = None,
        chars: CharacterSet | None = None,
        report: Report | None = None,
    ) -> Report:
        """
        Perturb f along f_k = f + delta_k g_k, delta_k = decay^k, and follow SP(f_k) back to SP(f).

        Explanation:
        dist_k is the largest distance from a member of SP(f_k) to SP(f). The run passes when
        dist_k <= C delta_k with a fitted C at most USC_MAX_CONSTANT (dist_k within the dedup
        radius when delta_k = 0), and when every nearest-neighbour chain through
        SP(f_1), ..., SP(f_n) ends at a value that ideal membership places in SP(f) at the
        scale of C delta_n (see `check_chains`).

        Raises:
            InputError: decay outside [0, 1) or no steps.
            AnalysisAssertionFailure: with the offending step and distances.

        """
        config = settings.GELFAND
        seed = config["DEFAULT_SEED"] if seed is None else seed
        radius = config["DEDUP_RADIUS"]
        if not 0 <= decay < 1:
            raise InputError(f"decay must lie in [0, 1), got {decay}.")
        if n_steps < 1:
            raise InputError("The experiment needs at least one step.")
        if f.algebra_id != algebra.algebra_id:
            raise AlgebraMismatch(f"Function into '{f.algebra_id}' for algebra '{algebra.algebra_id}'.")

        report = report or ReportService.build("usc", seed)
        chars = chars or CharacterService.characters(algebra, seed=seed)
        base = VectorSpectrumService.vv_spectrum_chars(f, chars)
        rng = np.random.default_rng(seed)

        deltas, distances, spectra = [], [], []
        report.payload.update({"delta": deltas, "dist": distances, "pass": False})

        for k in range(1, n_steps + 1):
            delta = decay**k
            f_k = f + delta * cls.random_direction(f, rng, directions)
            spectrum = VectorSpectrumService.vv_spectrum_chars(f_k, chars)
            for point in spectrum:
                VectorSpectrumService.vv_spectrum_membership(f_k, ScalarFunction(f.space, point), chars)

            deltas.append(delta)
            distances.append(max(base.distance_to(point) for point in spectrum))
            spectra.append(spectrum)

            if delta == 0 and distances[-1] > radius:
                raise AnalysisAssertionFailure(
                    "Unperturbed step moved the spectrum.", step=k, delta=delta, dist=distances[-1]
                )

        ratios = [d / delta for d, delta in zip(distances, deltas) if delta > 0]
        fitted = max(ratios, default=0.0)
        report.payload["fitted_C"] = fitted
        if fitted > config["USC_MAX_CONSTANT"]:
            step = int(np.argmax(ratios)) + 1
            raise AnalysisAssertionFailure(
                "dist_k <= C delta_k fails for every admissible C.",
                step=step,
                delta=deltas[step - 1],
                dist=distances[step - 1],
                fitted_C=fitted,
            )

        report.payload["chains"] = cls.check_chains(f, base, spectra, deltas, report)
        report.payload["pass"] = True
        return report

    @staticmethod
    def check_chains(
        f: AValuedFunction,
        base: SpectrumSet,
        spectra: list[SpectrumSet],
        deltas: list[float],
        report: Report | None = None,
    ) -> list:
        """
        Follow nearest-neighbour chains through SP(f_1), ..., SP(f_n) and classify each
        terminal value lambda_n against f itself.

        Explanation:
        lambda_n is tested by ideal membership with no character at hand. Singular values
        up to sqrt(|X|) times the bound C delta_n + dedup radius count as zero, since a
        lambda within that sup-distance of SP(f) leaves the generator span at most that
        small. Its sup-distance to SP(f) must stay within the bound as well.

        Raises:
            AnalysisAssertionFailure: if a terminal value is outside SP(f) at that scale.

        """
        config = settings.GELFAND
        bound = config["USC_MAX_CONSTANT"] * deltas[-1] + config["DEDUP_RADIUS"]
        scale = bound * np.sqrt(f.space.size)

        chains = []
        for start in range(len(spectra[0])):
            current = start
            for previous, spectrum in zip(spectra, spectra[1:]):
                current = spectrum.nearest(previous.points[current])

            terminal = spectra[-1].points[current]
            membership = VectorSpectrumService.vv_spectrum_membership(
                f, ScalarFunction(f.space, terminal), dedup_radius=scale
            )
            distance = base.distance_to(terminal)

            if report is not None:
                report.add_residual("chain_membership", membership.residual)
                report.add_residual("chain_distance", distance)
            chains.append(
                {
                    "start": start,
                    "terminal": current,
                    "limit": base.points[base.nearest(terminal)].tolist(),
                    "distance": distance,
                    "member": membership.in_spectrum,
                }
            )

            if not membership.in_spectrum or distance > bound:
                raise AnalysisAssertionFailure(
                    "Nearest-neighbour chain does not end at a point of SP(f).",
                    step=len(spectra),
                    start=start,
                    terminal=terminal,
                    in_ideal_spectrum=membership.in_spectrum,
                    distance=distance,
                    bound=bound,
                )
        return chains

    # --------------------
    # --- Compactness ---
    # --------------------

    @staticmethod
    def compactness_report(
        f: AValuedFunction, chars: CharacterSet, report: Report | None = None
    ) -> Report:
        """
        SP(f) is finite with at most |M(A)| members, each bounded by kappa_phi ||f||_X, and
        closed (a finite set).

        Raises:
            AnalysisAssertionFailure: if the size or the bound fails.

        """
        report = report or ReportService.build("compactness", chars.seed)
        spectrum = VectorSpectrumService.vv_spectrum_chars(f, chars)
        uniform = FunctionService.uniform_norm(f)

        report.payload.update(
            {"size": len(spectrum), "characters": len(chars), "uniform_norm": uniform, "closed": True}
        )
        if len(spectrum) > len(chars):
            raise AnalysisAssertionFailure(
                "SP(f) has more members than M(A).", size=len(spectrum), characters=len(chars)
            )

        largest = 0.0
        for index, character in enumerate(chars):
            sup = FunctionService.compose(character, f).sup_norm()
            kappa = LipschitzService.functional_norm(character, f.algebra, seed=chars.seed)
            largest = max(largest, sup)
            report.add_residual("bound_excess", max(0.0, sup - kappa * uniform))
            if sup > kappa * uniform + BOUND_SLACK:
                raise AnalysisAssertionFailure(
                    "Member of SP(f) exceeds the uniform bound.",
                    character=index,
                    sup=sup,
                    bound=kappa * uniform,
                )
        report.payload["max_sup_norm"] = largest
        return report

    # ------------------------------------
    # --- Neighbourhoods of non-members ---
    # ------------------------------------

    @staticmethod
    def closedness_margin(
        f: AValuedFunction, lam: ScalarFunction, certificate: Certificate, chars: CharacterSet
    ) -> dict:
        """
        Every phi o f stays at sup-distance at least 1 / sum ||a_i|| from a certified non-member.

        Raises:
            AnalysisAssertionFailure: if some phi o f comes closer.

        """
        margin = min(
            float(np.max(np.abs(FunctionService.compose(character, f).values - lam.values)))
            for character in chars
        )
        bound = 1 / certificate.norm_sum
        if margin + BOUND_SLACK < bound:
            raise AnalysisAssertionFailure(
                "A character image is closer than the certificate allows.", margin=margin, bound=bound
            )
        return {"margin": margin, "bound": bound}

    @classmethod
    def perturbation_protection(
        cls,
        f: AValuedFunction,
        lam: ScalarFunction,
        certificate: Certificate,
        chars: CharacterSet | None = None,
        trials: int = 100,
        seed: int | None = None,
    ) -> dict:
        """
        Pairs (f', lambda') with ||f' - f||_X + ||lambda' - lambda||_X < 1 / (2 sum ||a_i||) keep
        lambda' outside SP(f').

        Raises:
            AnalysisAssertionFailure: at the first trial whose lambda' falls into SP(f').

        """
        seed = settings.GELFAND["DEFAULT_SEED"] if seed is None else seed
        rng = np.random.default_rng(seed)
        epsilon = certificate.epsilon
        n = f.space.size

        for trial in range(trials):
            total = rng.uniform(0, 1) * epsilon * (1 - 1e-9)
            share = rng.uniform(0, 1)
            g = cls.random_direction(f, rng)
            mu = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            mu /= np.max(np.abs(mu))

            f_prime = f + (share * total) * g
            lam_prime = ScalarFunction(f.space, lam.values + (1 - share) * total * mu)
            membership = VectorSpectrumService.vv_spectrum_membership(f_prime, lam_prime, chars)
            if membership.in_spectrum:
                raise AnalysisAssertionFailure(
                    "Perturbation inside the protected radius entered the spectrum.",
                    step=trial,
                    epsilon=epsilon,
                    shift=total,
                )

        return {"epsilon": epsilon, "trials": trials, "protected": trials}
