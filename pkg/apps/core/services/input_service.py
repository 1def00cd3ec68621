import json
import logging
from pathlib import Path

from rest_framework import serializers

from apps.core.exceptions import ParseError
from apps.core.serializers import first_error

logger = logging.getLogger(__name__)

GALLERY_PREFIX = "gallery:"


class InputService:
    """Turn command-line arguments into JSON data."""

    @staticmethod
    def read(argument: str) -> str:
        """
        Resolve an input argument to text.

        A `gallery:<name>` reference is returned untouched, an existing file is read
        as UTF-8, and anything else is taken as inline JSON.

        """
        if argument.startswith(GALLERY_PREFIX):
            return argument

        path = Path(argument)
        try:
            if path.is_file():
                logger.debug("Reading input from %s", path)
                return path.read_text(encoding="utf-8")
        except OSError:
            # too long or otherwise not a path; treat as inline JSON
            pass
        return argument

    @staticmethod
    def loads(text: str):
        try:
            return json.loads(text)
        except json.JSONDecodeError as error:
            raise ParseError(error.msg, line=error.lineno)
        except UnicodeDecodeError as error:
            raise ParseError(str(error))

    @staticmethod
    def validate(serializer: serializers.Serializer):
        """Run a DRF serializer and convert its validation errors into `ParseError`."""

        if not serializer.is_valid():
            raise ParseError(first_error(serializer.errors))
        return serializer.validated_data

    @staticmethod
    def validate_field(field: serializers.Field, data):
        try:
            return field.run_validation(data)
        except serializers.ValidationError as error:
            raise ParseError(first_error(error.detail))
