"""AlgebraDocument Serializers - JSON document validation and rendering"""
from math import gcd

from rest_framework import serializers

from core.exceptions import AlgebraError
from algebras.models import GradedAlgebra
from algebras.scalars import FIELD_TAGS, GAUSSIAN, RATIONAL, scalar_from_parts, scalar_to_dict
from groups.models import GroupElement


def _exact_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise serializers.ValidationError(f"{name} must be an integer, got {value!r}")
    return value


def _rational(data, where: str) -> tuple:
    if not isinstance(data, dict) or set(data) != {"num", "den"}:
        raise serializers.ValidationError(f"{where} must be an object with num and den")
    num = _exact_int(data["num"], f"{where}.num")
    den = _exact_int(data["den"], f"{where}.den")
    if den <= 0:
        raise serializers.ValidationError(f"{where}.den must be positive")
    if gcd(num, den) != 1:
        raise serializers.ValidationError(f"{where} is not in lowest terms")
    return num, den


class ScalarField(serializers.Field):
    """{"num", "den"} for rationals, {"re": {...}, "im": {...}} for Gaussian rationals.

    The internal value is (field tag, parts); the document serializer checks
    the tag against the document's field.
    """

    def to_internal_value(self, data):
        if isinstance(data, dict) and set(data) == {"re", "im"}:
            return GAUSSIAN, _rational(data["re"], "re") + _rational(data["im"], "im")
        return RATIONAL, _rational(data, "scalar")

    def to_representation(self, value):
        return value


class StructureEntryField(serializers.Field):
    """[i, j, k, scalar]"""

    def to_internal_value(self, data):
        if not isinstance(data, list) or len(data) != 4:
            raise serializers.ValidationError("Structure entries are [i, j, k, scalar]")
        i, j, k = (_exact_int(index, "index") for index in data[:3])
        if min(i, j, k) < 0:
            raise serializers.ValidationError("Structure indices must be non-negative")
        return i, j, k, ScalarField().to_internal_value(data[3])

    def to_representation(self, value):
        return value


class BasisEntrySerializer(serializers.Serializer):
    """Serializer for one basis symbol and its degree bits"""
    label = serializers.CharField(allow_blank=False, trim_whitespace=False)
    degree = serializers.ListField(
        child=serializers.IntegerField(min_value=0, max_value=1), allow_null=True, required=False, default=None
    )


class AlgebraDocumentSerializer(serializers.Serializer):
    """Serializer for the structure-constants document of one algebra"""
    field = serializers.ChoiceField(choices=FIELD_TAGS)
    n = serializers.IntegerField(min_value=1, allow_null=True, required=False, default=None)
    name = serializers.CharField(allow_blank=True, required=False, default="")
    basis = BasisEntrySerializer(many=True, allow_empty=False)
    unit = serializers.ListField(child=ScalarField(), allow_empty=False)
    structure = serializers.ListField(child=StructureEntryField())

    def validate(self, data):
        """Check scalar shapes and degree lengths, then build the algebra"""
        field = data['field']
        for tag, _ in list(data['unit']) + [entry[3] for entry in data['structure']]:
            if tag != field:
                raise serializers.ValidationError({"field": f"Scalar of type {tag} in a {field} document"})

        degrees = [entry['degree'] for entry in data['basis']]
        n = data['n']
        if any(degree is None for degree in degrees):
            if n is not None or any(degree is not None for degree in degrees):
                raise serializers.ValidationError(
                    {"basis": "Either every basis entry has a degree of length n or none has"}
                )
            group_degrees = None
        else:
            if n is None or any(len(degree) != n for degree in degrees):
                raise serializers.ValidationError({"basis": f"Every degree must have length n={n}"})
            group_degrees = [GroupElement.from_coordinates(degree) for degree in degrees]

        try:
            data['algebra'] = GradedAlgebra.from_entries(
                field=field,
                labels=[entry['label'] for entry in data['basis']],
                entries=[(i, j, k, scalar_from_parts(field, *parts)) for i, j, k, (_, parts) in data['structure']],
                unit=[scalar_from_parts(field, *parts) for _, parts in data['unit']],
                degrees=group_degrees,
                n=n,
                name=data['name'],
            )
        except AlgebraError as e:
            raise serializers.ValidationError({"structure": str(e)})
        return data

    def create(self, validated_data):
        """Return the algebra built during validation"""
        return validated_data['algebra']

    def to_representation(self, instance: GradedAlgebra):
        """Deterministic document for an algebra, structure entries in (i, j, k) order"""
        field = instance.field
        return {
            "field": field,
            "n": instance.n if instance.is_graded else None,
            "name": instance.name,
            "basis": [
                {
                    "label": label,
                    "degree": list(instance.degrees[index].coordinates()) if instance.is_graded else None,
                }
                for index, label in enumerate(instance.labels)
            ],
            "unit": [scalar_to_dict(c, field) for c in instance.unit],
            "structure": [
                [i, j, k, scalar_to_dict(c, field)] for i, j, k, c in instance.structure_entries()
            ],
        }
