import io
import json

import numpy as np
from django.test import SimpleTestCase

from apps.core.models import SpectrumSet
from apps.core.services.command_service import CommandService


class CoreBaseTestCase(SimpleTestCase):
    """Shared helpers: running subcommands in-process and comparing complex results."""

    @staticmethod
    def run_command(*argv) -> tuple[int, str, str]:
        stdout, stderr = io.StringIO(), io.StringIO()
        code = CommandService.run_command([str(arg) for arg in argv], stdout=stdout, stderr=stderr)
        return code, stdout.getvalue(), stderr.getvalue()

    def run_report(self, *argv) -> tuple[int, dict]:
        code, output, _ = self.run_command(*argv)
        return code, json.loads(output)

    @staticmethod
    def pairs(values) -> str:
        """Inline JSON of complex numbers as [re, im] pairs."""

        return json.dumps([[complex(v).real, complex(v).imag] for v in values])

    @staticmethod
    def assertComplexClose(actual, expected, atol: float = 1e-9):
        np.testing.assert_allclose(
            np.asarray(actual, dtype=complex), np.asarray(expected, dtype=complex), rtol=0, atol=atol
        )

    def assertSameSet(self, spectrum: SpectrumSet, expected, atol: float = 1e-7):
        """
        Asserts that a spectrum holds exactly the expected points, in any order.
        """

        expected = SpectrumSet.from_points(expected, spectrum.radius, spectrum.kind, distance=spectrum.distance)
        self.assertEqual(len(spectrum), len(expected), f"{spectrum.points} != {expected.points}")
        self.assertLessEqual(spectrum.hausdorff(expected), atol)

    def assertReportPair(self, value, expected: complex, atol: float = 1e-9):
        """A [re, im] pair of a rendered report."""

        self.assertEqual(len(value), 2)
        self.assertAlmostEqual(value[0], complex(expected).real, delta=atol)
        self.assertAlmostEqual(value[1], complex(expected).imag, delta=atol)
