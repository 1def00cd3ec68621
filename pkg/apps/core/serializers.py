import math
from numbers import Real

from rest_framework import serializers

from apps.core.models import STATUS_CHOICES


class FiniteFloatField(serializers.FloatField):
    default_error_messages = {
        "not_finite": "Expected a finite number.",
    }

    def to_internal_value(self, data):
        try:
            value = super().to_internal_value(data)
        except OverflowError:
            self.fail("not_finite")
        if not math.isfinite(value):
            self.fail("not_finite")
        return value


class ComplexField(serializers.Field):
    """A complex number written as a [re, im] pair of finite numbers; no string forms."""

    default_error_messages = {
        "invalid": "Expected a [re, im] pair of numbers.",
        "not_finite": "Expected finite real and imaginary parts.",
    }

    def to_internal_value(self, data):
        if (
            not isinstance(data, (list, tuple))
            or len(data) != 2
            or not all(isinstance(v, Real) and not isinstance(v, bool) for v in data)
        ):
            self.fail("invalid")
        try:
            real, imag = float(data[0]), float(data[1])
        except OverflowError:
            self.fail("not_finite")
        if not (math.isfinite(real) and math.isfinite(imag)):
            self.fail("not_finite")
        return complex(real, imag)

    def to_representation(self, value):
        value = complex(value)
        return [value.real, value.imag]


class ComplexVectorField(serializers.ListField):
    child = ComplexField()

    def __init__(self, **kwargs):
        kwargs.setdefault("allow_empty", False)
        super().__init__(**kwargs)


class ReportSerializer(serializers.Serializer):
    command = serializers.CharField()
    status = serializers.ChoiceField(choices=STATUS_CHOICES)
    payload = serializers.JSONField()
    residuals = serializers.DictField(child=serializers.FloatField(allow_null=True))
    seed = serializers.IntegerField()
    tool_version = serializers.CharField()


def first_error(errors) -> str:
    """Flatten DRF error details into one readable line."""

    if isinstance(errors, dict):
        key, value = next(iter(errors.items()))
        return f"{key}: {first_error(value)}"
    if isinstance(errors, list) and errors:
        return first_error(errors[0])
    return str(errors)
