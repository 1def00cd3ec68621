from apps.algebra.management.base import AlgebraCommand
from apps.algebra.services.algebra_service import AlgebraService


class Command(AlgebraCommand):
    help = "Check the algebra axioms and report the semisimplicity witness."
    command = "validate"

    def run_report(self, report, **options):
        algebra = self.load_algebra(report, options)
        diagnostics = AlgebraService.validate_algebra(algebra)
        witness = AlgebraService.is_semisimple(algebra)

        for axiom, residual in diagnostics.as_dict().items():
            report.add_residual(axiom, residual)
        report.payload["dim"] = algebra.dim
        report.payload["semisimple"] = witness.semisimple
        report.payload["trace_form_singular_values"] = witness.singular_values
