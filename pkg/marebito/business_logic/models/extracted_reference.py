from dataclasses import dataclass, field
from typing import Optional

from marebito.business_logic.validators import validate_year

from .base import BaseDataclass
from .bib_record import AuthorName


@dataclass
class ExtractedReference(BaseDataclass):
    """Structured fields located in one citation."""

    raw: str
    """Original input text, preserved byte-for-byte"""

    authors: list[AuthorName] = field(default_factory=list)
    title: Optional[str] = None
    container: Optional[str] = None
    """Journal or series name as cited"""

    year: Optional[int] = None
    volume: Optional[str] = None
    pages: Optional[str] = None
    doi: Optional[str] = None

    def validate(self):
        if self.year is not None:
            validate_year('Extracted year', self.year)

    def has_identifying_field(self) -> bool:
        return bool(self.title or self.authors or self.doi)

    def get_surnames(self) -> list[str]:
        return [author.surname for author in self.authors]
