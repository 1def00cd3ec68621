from apps.core.services.input_service import InputService
from apps.functions.management.base import FunctionCommand
from apps.functions.services.a_character_service import ACharacterService
from apps.functions.services.analysis_service import AnalysisService
from apps.functions.services.io_service import FunctionIOService
from apps.functions.services.lipschitz_service import LipschitzService


class Command(FunctionCommand):
    help = "Uniform norm, Lipschitz constant and Lipschitz norm of f, with the Lip(X) checks."
    command = "lip"

    def add_command_arguments(self, parser):
        super().add_command_arguments(parser)
        parser.add_argument("--metric", required=True, help='{"space": [...], "d": [[...], ...]}')

    def run_report(self, report, **options):
        algebra = self.load_algebra(report, options)
        f = self.load_function(report, algebra, options)
        metric = FunctionIOService.parse_metric(InputService.read(options["metric"]))
        LipschitzService.check_space(f, metric)
        chars = self.load_characters(report, algebra, options)

        summary = LipschitzService.summary(f, metric)
        report.payload.update({"uniform": summary.uniform, "L": summary.constant, "lip_norm": summary.norm})
        report.payload["natural"] = LipschitzService.lip_natural_check(metric, seed=options["seed"])

        bounds = LipschitzService.composition_bounds(f, metric, chars, seed=options["seed"])
        report.add_residual("composition_excess", bounds["excess"])
        report.payload["equicontinuity_modulus"] = AnalysisService.equicontinuity_modulus(
            [f], metric, chars, seed=options["seed"]
        )

        if report.payload["semisimple"]:
            result = ACharacterService.a_valued_spectrum(f, chars, dedup_radius=options["dedup"])
            report.payload["a_valued_spectrum_is_image"] = (
                result.spectrum.hausdorff(result.image) <= options["dedup"]
            )
