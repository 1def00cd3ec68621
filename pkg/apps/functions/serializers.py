from rest_framework import serializers

from apps.core.serializers import ComplexField, ComplexVectorField, FiniteFloatField


class SpaceField(serializers.ListField):
    child = serializers.CharField(allow_blank=False)

    def __init__(self, **kwargs):
        kwargs.setdefault("allow_empty", False)
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        points = super().to_internal_value(data)
        if len(set(points)) != len(points):
            raise serializers.ValidationError("Point labels must be distinct.")
        return points


class FunctionSerializer(serializers.Serializer):
    """{"space": [...], "algebra": "<id>", "values": {"p": [[re, im], ...], ...}}"""

    space = SpaceField()
    algebra = serializers.CharField(required=False, allow_blank=True)
    values = serializers.DictField(child=ComplexVectorField())

    def validate(self, attrs):
        missing = [p for p in attrs["space"] if p not in attrs["values"]]
        extra = [p for p in attrs["values"] if p not in attrs["space"]]
        if missing or extra:
            raise serializers.ValidationError(
                {"values": f"Values must cover the space exactly (missing {missing}, extra {extra})."}
            )
        return attrs


class ScalarFunctionSerializer(serializers.Serializer):
    space = SpaceField(required=False)
    values = serializers.DictField(child=ComplexField())


class MetricSerializer(serializers.Serializer):
    space = SpaceField()
    d = serializers.ListField(
        child=serializers.ListField(child=FiniteFloatField(), allow_empty=False),
        allow_empty=False,
    )
