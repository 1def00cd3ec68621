import sys

from django.utils.module_loading import import_string

# documented subcommand -> app that ships it
COMMANDS = {
    "characters": "apps.algebra",
    "spectrum": "apps.algebra",
    "joint-spectrum": "apps.algebra",
    "gallery": "apps.algebra",
    "validate": "apps.algebra",
    "vspec": "apps.functions",
    "avspec": "apps.functions",
    "certify": "apps.functions",
    "acharacters": "apps.functions",
    "lip": "apps.functions",
    "usc": "apps.functions",
}

USAGE = "usage: gelfand {%s} [options]" % ",".join(COMMANDS)


class CommandService:
    @staticmethod
    def module_name(command: str) -> str:
        return command.replace("-", "_")

    @classmethod
    def run_command(cls, argv: list[str], stdout=None, stderr=None) -> int:
        """
        Run one documented subcommand and return its exit code.

        Args:
            argv (list): subcommand name followed by its arguments.
            stdout: stream receiving the report (defaults to sys.stdout).
            stderr: stream receiving usage and error lines (defaults to sys.stderr).

        Returns:
            int: 0 on pass, 1 on fail, 2 on usage or parse error.

        """
        stderr = stderr or sys.stderr
        if not argv or argv[0] not in COMMANDS:
            stderr.write(USAGE + "\n")
            return 2

        name = argv[0]
        module = cls.module_name(name)
        command_class = import_string(f"{COMMANDS[name]}.management.commands.{module}.Command")
        command = command_class(stdout=stdout, stderr=stderr)

        try:
            command.run_from_argv(["manage.py", module, *argv[1:]])
        except SystemExit as exit_:
            return exit_.code if isinstance(exit_.code, int) else 2
        return 0
