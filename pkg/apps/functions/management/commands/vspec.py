from apps.functions.management.base import FunctionCommand
from apps.functions.services.analysis_service import AnalysisService
from apps.functions.services.vv_spectrum_service import VectorSpectrumService


class Command(FunctionCommand):
    help = "SP(f) from the characters, every member and perturbation checked by ideal membership."
    command = "vspec"

    def run_report(self, report, **options):
        algebra = self.load_algebra(report, options)
        f = self.load_function(report, algebra, options)
        chars = self.load_characters(report, algebra, options)

        spectrum = VectorSpectrumService.vv_spectrum_chars(f, chars, options["dedup"])
        report.payload["set"] = [dict(zip(f.space.points, point)) for point in spectrum]
        report.payload["count"] = len(spectrum)

        summary = VectorSpectrumService.cross_check(
            f, chars, seed=options["seed"], dedup_radius=options["dedup"]
        )
        for name in ("member_residual_min", "certificate_residual_max"):
            report.add_residual(name, summary.pop(name))
        report.payload["oracles"] = summary

        AnalysisService.compactness_report(f, chars, report=report)
