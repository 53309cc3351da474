from drf_spectacular.utils import OpenApiParameter, extend_schema
from rest_framework.exceptions import NotFound
from rest_framework.response import Response
from rest_framework.viewsets import ViewSet

from marebito.business_logic.entities import get_author_summary, get_classification_summary, get_serial_summary
from marebito.business_logic.state import get_service_state

from ..serializers.entities import (
    AuthorSummarySerializer, ClassificationSummarySerializer, SerialSummarySerializer
)
from ..serializers.records import BibRecordSerializer

ANY_SEGMENT_REGEX = '[^/]+'


class DocumentViewSet(ViewSet):
    serializer_class = BibRecordSerializer
    lookup_value_regex = '[0-9]+'

    @extend_schema(parameters=[OpenApiParameter('id', int, OpenApiParameter.PATH, description='Document id')])
    def retrieve(self, request, pk=None):
        assert pk is not None

        record = get_service_state().corpus.get_record(int(pk))
        if record is None:
            raise NotFound(detail='Document not found')

        return Response(self.serializer_class(record).data)


class AuthorViewSet(ViewSet):
    serializer_class = AuthorSummarySerializer
    lookup_value_regex = ANY_SEGMENT_REGEX

    @extend_schema(parameters=[OpenApiParameter('id', str, OpenApiParameter.PATH, description='Author id')])
    def retrieve(self, request, pk=None):
        assert pk is not None

        summary = get_author_summary(get_service_state().corpus, pk)
        if summary is None:
            raise NotFound(detail='Author not found')

        return Response(self.serializer_class(summary).data)


class ClassificationViewSet(ViewSet):
    serializer_class = ClassificationSummarySerializer
    lookup_value_regex = ANY_SEGMENT_REGEX

    @extend_schema(parameters=[OpenApiParameter('id', str, OpenApiParameter.PATH, description='MSC code')])
    def retrieve(self, request, pk=None):
        assert pk is not None

        summary = get_classification_summary(get_service_state().corpus, pk)
        if summary is None:
            raise NotFound(detail='Classification not found')

        return Response(self.serializer_class(summary).data)


class SerialViewSet(ViewSet):
    serializer_class = SerialSummarySerializer
    lookup_value_regex = ANY_SEGMENT_REGEX

    @extend_schema(parameters=[OpenApiParameter('id', str, OpenApiParameter.PATH, description='Serial name')])
    def retrieve(self, request, pk=None):
        assert pk is not None

        summary = get_serial_summary(get_service_state().corpus, pk)
        if summary is None:
            raise NotFound(detail='Serial not found')

        return Response(self.serializer_class(summary).data)
