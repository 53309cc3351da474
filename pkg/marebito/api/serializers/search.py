from django.conf import settings

from rest_framework import serializers

from marebito.business_logic.constants import DEFAULT_PAGE_SIZE

from .records import BibRecordSerializer

MAX_PAGE_SIZE = 100


def get_default_page_size():
    return min(settings.MAREBITO.get('page_size', DEFAULT_PAGE_SIZE), MAX_PAGE_SIZE)


class PageParamsSerializer(serializers.Serializer):
    page = serializers.IntegerField(min_value=1, default=1)
    page_size = serializers.IntegerField(min_value=1, max_value=MAX_PAGE_SIZE, default=get_default_page_size)


class SearchPageSerializer(serializers.Serializer):
    count = serializers.IntegerField()
    page = serializers.IntegerField()
    page_size = serializers.IntegerField()
    results = BibRecordSerializer(many=True)
