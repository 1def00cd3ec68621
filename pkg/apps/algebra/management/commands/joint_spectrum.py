from apps.algebra.management.base import AlgebraCommand
from apps.algebra.services.io_service import AlgebraIOService
from apps.algebra.services.spectrum_service import SpectrumService
from apps.core.services.input_service import InputService


class Command(AlgebraCommand):
    help = "SP(a_1, ..., a_n) by character images, checked by ideal membership."
    command = "joint-spectrum"

    def add_command_arguments(self, parser):
        super().add_command_arguments(parser)
        parser.add_argument("--tuple", required=True, help="list of elements")

    def run_report(self, report, **options):
        algebra = self.load_algebra(report, options)
        elements = AlgebraIOService.parse_tuple(InputService.read(options["tuple"]), algebra)
        chars = self.load_characters(report, algebra, options)

        result = SpectrumService.joint_spectrum(
            algebra, elements, chars, seed=options["seed"], dedup_radius=options["dedup"]
        )
        report.payload["set"] = result.spectrum.points
        report.payload["checked_points"] = result.checked_points
        for name, value in result.residuals.items():
            report.add_residual(name, value)
