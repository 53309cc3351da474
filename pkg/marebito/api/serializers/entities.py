from rest_framework_dataclasses.serializers import DataclassSerializer

from marebito.business_logic.entities import AuthorSummary, ClassificationSummary, SerialSummary


class AuthorSummarySerializer(DataclassSerializer):

    class Meta:
        dataclass = AuthorSummary


class ClassificationSummarySerializer(DataclassSerializer):

    class Meta:
        dataclass = ClassificationSummary


class SerialSummarySerializer(DataclassSerializer):

    class Meta:
        dataclass = SerialSummary
