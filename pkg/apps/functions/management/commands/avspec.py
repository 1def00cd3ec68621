from apps.functions.management.base import FunctionCommand
from apps.functions.services.a_character_service import ACharacterService


class Command(FunctionCommand):
    help = "SP_A(f) through f~, with the chain f(X), {Psi(f)}, SP_A(f) checked."
    command = "avspec"

    def run_report(self, report, **options):
        algebra = self.load_algebra(report, options)
        f = self.load_function(report, algebra, options)
        ACharacterService.require_semisimple(algebra, "avspec")
        chars = self.load_characters(report, algebra, options)

        result = ACharacterService.a_valued_spectrum(f, chars, dedup_radius=options["dedup"])
        report.payload["set"] = result.spectrum.points
        report.payload["image"] = result.image.points
        report.payload["lifted"] = dict(zip(result.lifted.labels, result.lifted.points))
        for name, value in result.residuals.items():
            report.add_residual(name, value)
