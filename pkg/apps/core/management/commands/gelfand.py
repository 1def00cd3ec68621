import argparse

from django.core.management.base import BaseCommand, CommandError

from apps.core.services.command_service import USAGE, CommandService


class Command(BaseCommand):
    help = "Run a subcommand by its documented name, e.g. `gelfand joint-spectrum ...`."
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("argv", nargs=argparse.REMAINDER, help=USAGE)

    def handle(self, *args, **options):
        code = CommandService.run_command(options["argv"], stdout=self.stdout, stderr=self.stderr)
        if code:
            raise CommandError(f"exit status {code}", returncode=code)
