from apps.algebra.management.base import AlgebraCommand
from apps.algebra.services.io_service import AlgebraIOService
from apps.algebra.services.spectrum_service import SpectrumService
from apps.core.services.input_service import InputService


class Command(AlgebraCommand):
    help = "sp(a) from the characters, checked against the eigenvalues of L_a."
    command = "spectrum"

    def add_command_arguments(self, parser):
        super().add_command_arguments(parser)
        parser.add_argument("--element", required=True, help="coefficients as [[re, im], ...]")

    def run_report(self, report, **options):
        algebra = self.load_algebra(report, options)
        element = AlgebraIOService.parse_element(InputService.read(options["element"]), algebra)
        chars = self.load_characters(report, algebra, options)

        result = SpectrumService.spectrum(element, chars, dedup_radius=options["dedup"])
        report.payload["set"] = result.spectrum.scalars()
        report.payload["eigenvalues"] = result.eigenvalues.scalars()
        report.add_residual("spectrum", result.residual)
