import json
import math

import numpy as np
from django.conf import settings

from apps.core.exceptions import GelfandError
from apps.core.models import STATUS_FAIL, Report, SpectrumSet
from apps.core.serializers import ReportSerializer

FORMAT_JSON = "json"
FORMAT_TEXT = "text"


class ReportService:
    """Build, fill and render `Report` objects."""

    @staticmethod
    def build(command: str, seed: int) -> Report:
        return Report(command=command, seed=seed, tool_version=settings.GELFAND["VERSION"])

    @classmethod
    def record_error(cls, report: Report, error: GelfandError) -> Report:
        """Turn a raised error into the report status and its evidence payload."""

        detail = {
            "error": type(error).__name__,
            "message": str(error),
            **cls.to_primitive(error.payload),
        }
        if error.status == STATUS_FAIL:
            return report.fail(detail)
        return report.fail(detail, status=error.status)

    @classmethod
    def to_primitive(cls, value):
        """
        Convert numerical results into JSON primitives.

        Note: complex numbers become [re, im] pairs and non-finite floats become None.

        """
        if isinstance(value, SpectrumSet):
            return {
                "kind": value.kind,
                "size": len(value),
                "set": cls.to_primitive(
                    value.scalars() if value.width == 1 and value.kind == "scalar" else value.points
                ),
            }
        if isinstance(value, dict):
            return {str(key): cls.to_primitive(item) for key, item in value.items()}
        if isinstance(value, (list, tuple, range)):
            return [cls.to_primitive(item) for item in value]
        if isinstance(value, np.ndarray):
            return cls.to_primitive(value.tolist())
        if isinstance(value, np.generic):
            return cls.to_primitive(value.item())
        if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
            return value
        if isinstance(value, complex):
            return [cls.to_primitive(value.real), cls.to_primitive(value.imag)]
        if isinstance(value, float):
            return value if math.isfinite(value) else None
        return str(value)

    @classmethod
    def render(cls, report: Report, output_format: str = FORMAT_JSON) -> str:
        data = ReportSerializer(
            Report(
                command=report.command,
                status=report.status,
                payload=cls.to_primitive(report.payload),
                residuals=cls.to_primitive(report.residuals),
                seed=report.seed,
                tool_version=report.tool_version,
            )
        ).data

        if output_format == FORMAT_TEXT:
            return cls.__render_text(data)
        return json.dumps(data, sort_keys=True, indent=2)

    @classmethod
    def __render_text(cls, data) -> str:
        lines = [
            f"command:  {data['command']}",
            f"status:   {data['status']}",
            f"seed:     {data['seed']}",
            f"version:  {data['tool_version']}",
        ]

        if data["residuals"]:
            lines.append("residuals:")
            width = max(len(name) for name in data["residuals"])
            for name in sorted(data["residuals"]):
                value = data["residuals"][name]
                shown = "n/a" if value is None else f"{value:.3e}"
                lines.append(f"  {name.ljust(width)}  {shown}")

        lines.append("payload:")
        for key in sorted(data["payload"]):
            lines.extend(cls.__render_entry(key, data["payload"][key], indent=2))
        return "\n".join(lines)

    @classmethod
    def __render_entry(cls, key, value, indent: int) -> list[str]:
        pad = " " * indent
        if isinstance(value, dict):
            lines = [f"{pad}{key}:"]
            for sub_key in sorted(value):
                lines.extend(cls.__render_entry(sub_key, value[sub_key], indent + 2))
            return lines
        if isinstance(value, list) and value and isinstance(value[0], list):
            lines = [f"{pad}{key}:"]
            lines.extend(f"{pad}  {cls.__format_value(row)}" for row in value)
            return lines
        return [f"{pad}{key}: {cls.__format_value(value)}"]

    @classmethod
    def __format_value(cls, value) -> str:
        # a [re, im] pair prints as a complex number
        if (
            isinstance(value, list)
            and len(value) == 2
            and all(isinstance(v, float) for v in value)
        ):
            return f"{value[0]:.6g}{value[1]:+.6g}i"
        if isinstance(value, list):
            return "  ".join(cls.__format_value(v) for v in value)
        if isinstance(value, float):
            return f"{value:.6g}"
        return str(value)
