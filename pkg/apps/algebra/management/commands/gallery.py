import json

from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.services.gallery_service import GalleryService
from apps.algebra.services.io_service import AlgebraIOService
from apps.core.management.base import ReportCommand


class Command(ReportCommand):
    help = "List the built-in algebras, or show one of them."
    command = "gallery"

    def add_command_arguments(self, parser):
        parser.add_argument("name", nargs="?", help="gallery algebra to show")

    def run_report(self, report, **options):
        report.payload["names"] = GalleryService.names()
        if not options["name"]:
            return

        algebra = GalleryService.gallery(options["name"])
        for axiom, residual in AlgebraService.validate_algebra(algebra).as_dict().items():
            report.add_residual(axiom, residual)
        report.payload["algebra"] = json.loads(AlgebraIOService.serialize_algebra(algebra))
        report.payload["semisimple"] = AlgebraService.is_semisimple(algebra).semisimple
