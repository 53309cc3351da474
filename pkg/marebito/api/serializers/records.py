from rest_framework_dataclasses.serializers import DataclassSerializer

from marebito.business_logic.models import BibRecord


class BibRecordSerializer(DataclassSerializer):

    class Meta:
        dataclass = BibRecord
