from marebito.business_logic.models import ExtractedReference

from .base import ReferenceExtractor, get_extractor  # noqa: F401
from .rule_cascade import RuleCascadeExtractor  # noqa: F401
from .structured import extract_structured  # noqa: F401


def extract_fields(citation: str) -> ExtractedReference:
    return get_extractor().extract(citation)
