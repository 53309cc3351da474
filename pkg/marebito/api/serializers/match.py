from rest_framework import serializers
from rest_framework_dataclasses.serializers import DataclassSerializer

from marebito.business_logic.models import MatchResult


class MatchRequestSerializer(serializers.Serializer):
    citations = serializers.ListField(
        child=serializers.JSONField(), allow_empty=True, help_text='Citation strings or structured field maps'
    )
    min_score = serializers.FloatField(required=False, min_value=0, max_value=1)


class MatchResultSerializer(DataclassSerializer):

    class Meta:
        dataclass = MatchResult
