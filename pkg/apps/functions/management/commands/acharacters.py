from apps.algebra.management.base import AlgebraCommand
from apps.functions.models import EVALUATION
from apps.functions.services.a_character_service import ACharacterService
from apps.functions.services.io_service import FunctionIOService


class Command(AlgebraCommand):
    help = "Enumerate the A-characters of C(X, A) by lifting the characters of C(X)."
    command = "acharacters"

    def add_command_arguments(self, parser):
        super().add_command_arguments(parser)
        parser.add_argument("--space", required=True, help="number of points, or a JSON list of labels")

    def run_report(self, report, **options):
        algebra = self.load_algebra(report, options)
        space = FunctionIOService.parse_space(options["space"])
        chars = self.load_characters(report, algebra, options)

        lifts = ACharacterService.enumerate_a_characters(algebra, space, chars, seed=options["seed"])
        report.payload["count"] = len(lifts)
        report.payload["a_characters"] = [
            {"point": lift.point, "kind": lift.kind} for lift in lifts
        ]
        report.payload["all_evaluations"] = all(lift.kind == EVALUATION for lift in lifts)
        for lift in lifts:
            for name, value in lift.residuals.items():
                report.add_residual(name, value)
            restriction = ACharacterService.scalar_restriction(lift, algebra, space)
            report.add_residual("restriction", restriction.character.residual)
            report.add_residual("restriction_embedding", restriction.embedding_residual)
