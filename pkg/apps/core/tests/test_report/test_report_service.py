import json

import numpy as np
from django.test import override_settings

from apps.core.exceptions import AnalysisAssertionFailure, NotInvertible, ParseError
from apps.core.models import STATUS_ERROR, STATUS_FAIL, STATUS_PASS, SpectrumSet
from apps.core.services.report_service import FORMAT_TEXT, ReportService
from apps.core.tests.base_test import CoreBaseTestCase


class ReportServiceTest(CoreBaseTestCase):
    def test_build(self):
        report = ReportService.build("spectrum", 7)

        self.assertEqual(report.command, "spectrum")
        self.assertEqual(report.seed, 7)
        self.assertEqual(report.status, STATUS_PASS)
        self.assertTrue(report.passed)

    @override_settings(GELFAND={"VERSION": "9.9.9"})
    def test_build_reads_the_version(self):
        self.assertEqual(ReportService.build("gallery", 0).tool_version, "9.9.9")

    def test_worst_residual_wins(self):
        report = ReportService.build("vspec", 0)
        report.add_residual("certificate", 1e-12)
        report.add_residual("certificate", 1e-10)
        report.add_residual("certificate", 1e-14)

        self.assertEqual(report.residuals["certificate"], 1e-10)

    def test_to_primitive(self):
        data = ReportService.to_primitive(
            {
                "z": 1 + 2j,
                "array": np.array([1 + 0j, 2j]),
                "nan": float("nan"),
                "int": np.int64(3),
                "flag": np.bool_(True),
                "set": SpectrumSet.from_points([2, 1], 1e-7),
            }
        )

        self.assertEqual(data["z"], [1.0, 2.0])
        self.assertEqual(data["array"], [[1.0, 0.0], [0.0, 2.0]])
        self.assertIsNone(data["nan"])
        self.assertEqual(data["int"], 3)
        self.assertIs(data["flag"], True)
        self.assertEqual(data["set"], {"kind": "scalar", "size": 2, "set": [[1.0, 0.0], [2.0, 0.0]]})

    def test_record_fail(self):
        report = ReportService.build("usc", 0)
        ReportService.record_error(report, AnalysisAssertionFailure("bound broken", step=3, dist=0.5))

        self.assertEqual(report.status, STATUS_FAIL)
        counterexample = report.payload["counterexample"]
        self.assertEqual(counterexample["error"], "AnalysisAssertionFailure")
        self.assertEqual(counterexample["step"], 3)
        self.assertEqual(counterexample["dist"], 0.5)

    def test_record_error(self):
        report = ReportService.build("spectrum", 0)
        ReportService.record_error(report, ParseError("Expecting value", line=4))
        self.assertEqual(report.status, STATUS_ERROR)
        self.assertEqual(report.payload["counterexample"]["message"], "line 4: Expecting value")

        report = ReportService.build("spectrum", 0)
        ReportService.record_error(report, NotInvertible(0.0))
        self.assertEqual(report.status, STATUS_ERROR)
        self.assertEqual(report.payload["counterexample"]["smallest_singular_value"], 0.0)

    def test_render_json_is_sorted(self):
        report = ReportService.build("spectrum", 0)
        report.payload.update({"set": [2 + 0j], "algebra": "C2"})
        report.add_residual("spectrum", 0.0)

        rendered = ReportService.render(report)
        data = json.loads(rendered)

        self.assertEqual(list(data), sorted(data))
        self.assertEqual(data["payload"]["set"], [[2.0, 0.0]])
        self.assertEqual(rendered, ReportService.render(report))

    def test_render_text(self):
        report = ReportService.build("spectrum", 0)
        report.payload["set"] = [2 + 0j, 5 + 0j]
        report.add_residual("spectrum", 1e-15)

        text = ReportService.render(report, FORMAT_TEXT)

        self.assertIn("command:  spectrum", text)
        self.assertIn("status:   pass", text)
        self.assertIn("spectrum  1.000e-15", text)
        self.assertIn("2+0i", text)
