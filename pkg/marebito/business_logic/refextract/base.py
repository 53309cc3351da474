import logging
from typing import Type, TypeVar

from django.conf import settings

from marebito.core.utils.importing import instantiate_from_settings

from ..models import ExtractedReference

T = TypeVar('T', bound='ReferenceExtractor')

logger = logging.getLogger(__name__)


class ReferenceExtractor:
    """Locates structured fields in one citation string. Implementations must be pure."""

    _instance = None

    @classmethod
    def get_instance(cls: Type[T]) -> T:
        instance = cls._instance
        if not instance:
            instance = instantiate_from_settings(settings.REFERENCE_EXTRACTOR)
            logger.debug('Using reference extractor %s', instance.__class__.__name__)
            ReferenceExtractor._instance = instance

        return instance

    @classmethod
    def clear_instance_cache(cls):
        ReferenceExtractor._instance = None

    def extract(self, citation: str) -> ExtractedReference:
        raise NotImplementedError('Must be implemented in a child class')


def get_extractor() -> ReferenceExtractor:
    return ReferenceExtractor.get_instance()
