from apps.algebra.services.io_service import AlgebraIOService
from apps.core.services.input_service import InputService
from apps.functions.management.base import FunctionCommand
from apps.functions.services.analysis_service import AnalysisService


class Command(FunctionCommand):
    help = "Upper semicontinuity run: f_k = f + decay^k g_k and the distance of SP(f_k) to SP(f)."
    command = "usc"

    def add_command_arguments(self, parser):
        super().add_command_arguments(parser)
        parser.add_argument("--steps", type=int, default=10)
        parser.add_argument("--decay", type=float, default=0.5)
        parser.add_argument(
            "--directions", default=None, help="list of elements spanning the perturbations"
        )

    def run_report(self, report, **options):
        algebra = self.load_algebra(report, options)
        f = self.load_function(report, algebra, options)
        directions = None
        if options["directions"]:
            directions = AlgebraIOService.parse_tuple(InputService.read(options["directions"]), algebra)
        chars = self.load_characters(report, algebra, options)

        AnalysisService.usc_experiment(
            algebra,
            f,
            n_steps=options["steps"],
            decay=options["decay"],
            seed=options["seed"],
            directions=directions,
            chars=chars,
            report=report,
        )
