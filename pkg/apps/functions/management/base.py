from apps.algebra.models import Algebra
from apps.algebra.management.base import AlgebraCommand
from apps.core.models import Report
from apps.core.services.input_service import InputService
from apps.functions.models import AValuedFunction
from apps.functions.services.function_service import FunctionService
from apps.functions.services.io_service import FunctionIOService


class FunctionCommand(AlgebraCommand):
    """A report command over `--algebra` and a function `--function` into it."""

    def add_command_arguments(self, parser):
        super().add_command_arguments(parser)
        parser.add_argument("--function", required=True, help="function JSON, file or inline")

    def load_function(self, report: Report, algebra: Algebra, options: dict) -> AValuedFunction:
        f = FunctionIOService.parse_function(InputService.read(options["function"]), algebra)
        report.payload["space"] = list(f.space.points)
        report.payload["uniform_norm"] = FunctionService.uniform_norm(f)
        return f
