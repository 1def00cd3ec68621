import cmath
from numbers import Real

import numpy as np
from rest_framework import serializers

from apps.core.serializers import ComplexVectorField


class StructureField(serializers.Field):
    """
    Sparse structure constants: a list of [i, j, k, re, im] entries, omitted entries zero.

    The internal value is the list of validated entries; the representation of a
    dense tensor lists its nonzero entries in index order.
    """

    default_error_messages = {
        "not_a_list": "Expected a list of [i, j, k, re, im] entries.",
        "invalid_entry": "Entry {index} is not of the form [i, j, k, re, im].",
        "not_finite": "Entry {index} has a non-finite coefficient.",
    }

    def to_internal_value(self, data):
        if not isinstance(data, list):
            self.fail("not_a_list")

        entries = []
        for index, entry in enumerate(data):
            if not self.__is_entry(entry):
                self.fail("invalid_entry", index=index)
            i, j, k, re, im = entry
            try:
                value = complex(float(re), float(im))
            except OverflowError:
                self.fail("not_finite", index=index)
            if not cmath.isfinite(value):
                self.fail("not_finite", index=index)
            entries.append((i, j, k, value))
        return entries

    @staticmethod
    def __is_entry(entry) -> bool:
        if not isinstance(entry, list) or len(entry) != 5:
            return False
        indices, parts = entry[:3], entry[3:]
        return all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in indices) and all(
            isinstance(v, Real) and not isinstance(v, bool) for v in parts
        )

    def to_representation(self, value: np.ndarray):
        return [
            [int(i), int(j), int(k), float(value[i, j, k].real), float(value[i, j, k].imag)]
            for i, j, k in np.argwhere(value != 0)
        ]


class AlgebraSerializer(serializers.Serializer):
    dim = serializers.IntegerField(min_value=1)
    basis = serializers.ListField(
        child=serializers.CharField(allow_blank=False), source="basis_names"
    )
    unit = ComplexVectorField()
    structure = StructureField()

    def validate_basis(self, value):
        if len(set(value)) != len(value):
            raise serializers.ValidationError("Basis names must be distinct.")
        return value

    def validate(self, attrs):
        dim = len(attrs["basis_names"])
        seen = set()
        for i, j, k, _ in attrs["structure"]:
            if max(i, j, k) >= dim:
                raise serializers.ValidationError(
                    {"structure": f"Index triple {[i, j, k]} out of range for {dim} basis names."}
                )
            if (i, j, k) in seen:
                raise serializers.ValidationError(
                    {"structure": f"Index triple {[i, j, k]} given twice."}
                )
            seen.add((i, j, k))
        return attrs


class ElementField(ComplexVectorField):
    """Coefficient vector of an element, one [re, im] pair per basis vector."""


class TupleField(serializers.ListField):
    child = ElementField()

    def __init__(self, **kwargs):
        kwargs.setdefault("allow_empty", False)
        super().__init__(**kwargs)
