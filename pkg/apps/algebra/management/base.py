from apps.algebra.models import Algebra, CharacterSet
from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.services.character_service import CharacterService
from apps.algebra.services.io_service import AlgebraIOService
from apps.core.management.base import ReportCommand
from apps.core.models import Report
from apps.core.services.input_service import InputService


class AlgebraCommand(ReportCommand):
    """A report command that reads `--algebra` and usually needs its characters."""

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--algebra", required=True, help="gallery:<name>, a JSON file, or inline JSON"
        )

    def load_algebra(self, report: Report, options: dict) -> Algebra:
        algebra = AlgebraIOService.parse_algebra(InputService.read(options["algebra"]))
        report.payload["algebra"] = algebra.algebra_id
        return algebra

    def load_characters(self, report: Report, algebra: Algebra, options: dict) -> CharacterSet:
        chars = CharacterService.characters(
            algebra, tol=options["tol"], seed=options["seed"], dedup_radius=options["dedup"]
        )
        report.add_residual("character", chars.worst_residual)
        report.payload["semisimple"] = AlgebraService.is_semisimple(algebra).semisimple

        if options["corrupt_characters"]:
            chars = CharacterService.corrupt_characters(chars)
        return chars
