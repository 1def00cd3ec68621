import json

import numpy as np

from apps.algebra.models import Algebra
from apps.algebra.services.gallery_service import GalleryService
from apps.core.exceptions import AlgebraMismatch, DimensionMismatch, ParseError
from apps.core.services.input_service import InputService
from apps.functions.models import AValuedFunction, FiniteMetric, FiniteSpace, ScalarFunction
from apps.functions.serializers import (
    FunctionSerializer,
    MetricSerializer,
    ScalarFunctionSerializer,
    SpaceField,
)


class FunctionIOService:
    @staticmethod
    def __load(text_or_data):
        data = InputService.loads(text_or_data) if isinstance(text_or_data, str) else text_or_data
        if not isinstance(data, dict):
            raise ParseError("Expected a JSON object.", line=1)
        return data

    @classmethod
    def parse_function(cls, text_or_data, algebra: Algebra) -> AValuedFunction:
        """
        Parse a function JSON against an algebra.

        The "algebra" field is informational; it only conflicts when it names a gallery
        algebra other than the one given.

        """
        attrs = InputService.validate(FunctionSerializer(data=cls.__load(text_or_data)))

        tag = attrs.get("algebra")
        if tag in GalleryService.names() and tag != algebra.algebra_id:
            raise AlgebraMismatch(f"Function is tagged '{tag}' but the algebra is '{algebra.algebra_id}'.")

        space = FiniteSpace(tuple(attrs["space"]))
        rows = [attrs["values"][point] for point in space]
        for point, row in zip(space, rows):
            if len(row) != algebra.dim:
                raise DimensionMismatch(
                    f"Value at '{point}' has {len(row)} coefficients, algebra has dimension {algebra.dim}."
                )
        return AValuedFunction(space, algebra, np.array(rows, dtype=complex))

    @staticmethod
    def serialize_function(f: AValuedFunction) -> str:
        data = FunctionSerializer(
            {
                "space": list(f.space.points),
                "algebra": f.algebra_id,
                "values": {point: list(row) for point, row in zip(f.space, f.values)},
            }
        ).data
        return json.dumps(data, sort_keys=True)

    @classmethod
    def parse_scalar_function(cls, text_or_data, space: FiniteSpace) -> ScalarFunction:
        """A lambda JSON {"space": [...], "values": {"p": [re, im]}}; "space" may be omitted."""

        attrs = InputService.validate(ScalarFunctionSerializer(data=cls.__load(text_or_data)))
        labels = attrs.get("space", list(attrs["values"]))
        if set(labels) != set(space.points) or set(attrs["values"]) != set(space.points):
            raise DimensionMismatch("lambda must be given on exactly the points of the function's space.")
        return ScalarFunction(space, np.array([attrs["values"][p] for p in space], dtype=complex))

    @classmethod
    def parse_metric(cls, text_or_data) -> FiniteMetric:
        attrs = InputService.validate(MetricSerializer(data=cls.__load(text_or_data)))
        space = FiniteSpace(tuple(attrs["space"]))
        rows = attrs["d"]
        if len(rows) != space.size or any(len(row) != space.size for row in rows):
            raise DimensionMismatch(f"Distance matrix must be {space.size} x {space.size}.")
        return FiniteMetric(space, np.array(rows, dtype=float))

    @staticmethod
    def parse_space(text: str) -> FiniteSpace:
        """`3` gives x0, x1, x2; a JSON list gives its labels."""

        data = InputService.loads(text)
        if isinstance(data, int) and not isinstance(data, bool):
            if data < 1:
                raise DimensionMismatch("A space needs at least one point.")
            return FiniteSpace.of_size(data)
        return FiniteSpace(tuple(InputService.validate_field(SpaceField(), data)))
