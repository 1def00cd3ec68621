import argparse
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.core.exceptions import GelfandError, UnexpectedFailure
from apps.core.models import STATUS_FAIL, Report
from apps.core.services.report_service import FORMAT_JSON, FORMAT_TEXT, ReportService

logger = logging.getLogger(__name__)


class ReportCommand(BaseCommand):
    """
    Base of every subcommand: shared flags, error capture and report emission.

    Subclasses set `command` (the documented subcommand name), add their own
    arguments in `add_command_arguments` and fill the report in `run_report`.
    Exit codes: 0 pass, 1 fail or refused computation, 2 usage or parse error.

    """

    command = None
    requires_system_checks = []

    def add_arguments(self, parser):
        config = settings.GELFAND
        parser.add_argument("--tol", type=float, default=config["TOL"])
        parser.add_argument("--dedup", type=float, default=config["DEDUP_RADIUS"])
        parser.add_argument("--seed", type=int, default=config["DEFAULT_SEED"])
        parser.add_argument(
            "--format", choices=[FORMAT_JSON, FORMAT_TEXT], default=FORMAT_JSON
        )
        # forced-failure hook for the oracle tests
        parser.add_argument(
            "--corrupt-characters", action="store_true", help=argparse.SUPPRESS
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def run_report(self, report: Report, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        logger.info("Running %s with %s", self.command, options)
        report = ReportService.build(self.command, options["seed"])
        exit_code = 0

        try:
            self.run_report(report, **options)
        except GelfandError as error:
            ReportService.record_error(report, error)
            exit_code = error.exit_code
        except Exception as error:
            logger.exception("%s aborted", self.command)
            failure = UnexpectedFailure(error)
            ReportService.record_error(report, failure)
            exit_code = failure.exit_code

        if not report.passed and exit_code == 0:
            exit_code = 1 if report.status == STATUS_FAIL else 2

        self.stdout.write(ReportService.render(report, options["format"]))

        if exit_code:
            raise CommandError(f"{self.command}: {report.status}", returncode=exit_code)
