from apps.core.services.input_service import InputService
from apps.functions.management.base import FunctionCommand
from apps.functions.models import Certificate
from apps.functions.services.analysis_service import AnalysisService
from apps.functions.services.io_service import FunctionIOService
from apps.functions.services.vv_spectrum_service import VectorSpectrumService


class Command(FunctionCommand):
    help = "Certify lambda outside SP(f), or name the character that puts it inside."
    command = "certify"

    def add_command_arguments(self, parser):
        super().add_command_arguments(parser)
        parser.add_argument("--lambda", dest="lam", required=True, help="scalar function JSON")
        parser.add_argument("--trials", type=int, default=100, help="protected-neighbourhood trials")

    def run_report(self, report, **options):
        algebra = self.load_algebra(report, options)
        f = self.load_function(report, algebra, options)
        lam = FunctionIOService.parse_scalar_function(InputService.read(options["lam"]), f.space)
        chars = self.load_characters(report, algebra, options)

        result = VectorSpectrumService.certificate(f, lam, chars)
        if not isinstance(result, Certificate):
            report.payload["in_spectrum"] = True
            report.payload["character"] = result.character.values
            report.add_residual("membership", result.residual)
            report.add_residual("distance", result.distance)
            return

        report.payload["in_spectrum"] = False
        report.payload["certificate"] = {
            "points": list(result.points),
            "coefficients": [a.coeffs for a in result.coefficients],
            "norm_sum": result.norm_sum,
        }
        report.add_residual("certificate", VectorSpectrumService.verify_certificate(f, lam, result))
        report.payload["closedness"] = AnalysisService.closedness_margin(f, lam, result, chars)
        report.payload["protection"] = AnalysisService.perturbation_protection(
            f, lam, result, trials=options["trials"], seed=options["seed"]
        )
