"""
Author, classification and serial summaries derived from the corpus for the entity endpoints.
"""
from dataclasses import dataclass, field
from typing import Optional

from .corpus import Corpus
from .models.base import BaseDataclass
from .msc import get_msc_title, is_valid_msc_code


@dataclass
class AuthorSummary(BaseDataclass):
    author_id: str
    name_forms: list[str] = field(default_factory=list)
    """Distinct spellings of the author's name, in first-seen order"""

    document_ids: list[int] = field(default_factory=list)


@dataclass
class ClassificationSummary(BaseDataclass):
    code: str
    description: Optional[str] = None
    count: int = 0


@dataclass
class SerialSummary(BaseDataclass):
    serial: str
    count: int = 0
    document_ids: list[int] = field(default_factory=list)


def get_author_summary(corpus: Corpus, author_id: str) -> Optional[AuthorSummary]:
    records = corpus.get_records_by_author_id(author_id)
    if not records:
        return None

    name_forms = {}
    for record in records:
        for author in record.authors:
            if author.author_id == author_id:
                name_forms[author.format_name()] = None

    return AuthorSummary(
        author_id=author_id,
        name_forms=list(name_forms),
        document_ids=[record.id for record in records],
    )


def get_classification_summary(corpus: Corpus, code: str) -> Optional[ClassificationSummary]:
    """Known codes are those of the shipped top-level table plus every prefix the corpus uses."""
    if not is_valid_msc_code(code):
        return None

    count = len(corpus.get_records_by_msc_prefix(code))
    description = get_msc_title(code)
    if description is None and count == 0:
        return None

    return ClassificationSummary(code=code, description=description, count=count)


def get_serial_summary(corpus: Corpus, serial: str) -> Optional[SerialSummary]:
    records = corpus.get_records_by_serial(serial)
    if not records:
        return None

    return SerialSummary(serial=serial, count=len(records), document_ids=[record.id for record in records])
