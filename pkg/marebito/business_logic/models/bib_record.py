from dataclasses import dataclass, field
from typing import Optional

from marebito.business_logic.exceptions import InvalidRecordError, ValidationError
from marebito.business_logic.validators import (
    validate_gte_value, validate_msc_code, validate_not_blank, validate_optional_type, validate_type, validate_year
)
from marebito.core.logging import validates

from .base import BaseDataclass


@dataclass
class AuthorName(BaseDataclass):
    surname: str = field(metadata={'example_value': 'Einstein'})
    given: Optional[str] = field(default=None, metadata={'example_value': 'A.'})
    author_id: Optional[str] = field(default=None, metadata={'example_value': 'einstein.albert'})
    """Disambiguated author identifier"""

    @validates()
    def validate(self):
        validate_type('Author surname', self.surname, str)
        validate_not_blank('Author surname', self.surname)
        validate_optional_type('Author given name', self.given, str)
        validate_optional_type('Author identifier', self.author_id, str)

    def format_name(self) -> str:
        return f'{self.surname}, {self.given}' if self.given else self.surname


@dataclass
class BibRecord(BaseDataclass):
    """One indexed publication keyed by its document number."""

    id: int = field(metadata={'example_value': 2581232})  # noqa: A003
    title: str = field(metadata={'example_value': 'Zur Elektrodynamik bewegter Körper'})
    authors: list[AuthorName] = field(default_factory=list)
    year: Optional[int] = field(default=None, metadata={'example_value': 1905})
    serial: Optional[str] = field(default=None, metadata={'example_value': 'Ann. Phys.'})
    """Journal or series name"""

    volume: Optional[str] = field(default=None, metadata={'example_value': '17'})
    pages: Optional[str] = field(default=None, metadata={'example_value': '891-921'})
    doi: Optional[str] = field(default=None, metadata={'example_value': '10.1002/andp.19053221004'})
    msc: list[str] = field(default_factory=list, metadata={'example_value': ['83A05']})
    abstract_redacted: bool = False
    """Third-party abstract text must be withheld"""

    def validate(self):
        """Raise `InvalidRecordError` naming the first field that breaks record invariants."""
        for field_name in self.get_field_names():
            try:
                getattr(self, f'validate_{field_name}')()
            except ValidationError as ex:
                raise InvalidRecordError(field_name, str(ex)) from ex

    @validates('record id')
    def validate_id(self):
        validate_type('Record id', self.id, int)
        validate_gte_value('Record id', self.id, 1)

    @validates('record title')
    def validate_title(self):
        validate_type('Record title', self.title, str)
        validate_not_blank('Record title', self.title)

    def validate_authors(self):
        validate_type('Record authors', self.authors, list)
        for author in self.authors:
            validate_type('Record author', author, AuthorName)
            author.validate()

    def validate_year(self):
        if self.year is not None:
            validate_year('Record year', self.year)

    def validate_serial(self):
        validate_optional_type('Record serial', self.serial, str)

    def validate_volume(self):
        validate_optional_type('Record volume', self.volume, str)

    def validate_pages(self):
        validate_optional_type('Record pages', self.pages, str)

    def validate_doi(self):
        validate_optional_type('Record DOI', self.doi, str)

    def validate_msc(self):
        validate_type('Record MSC codes', self.msc, list)
        for code in self.msc:
            validate_msc_code('Record MSC code', code)

    def validate_abstract_redacted(self):
        validate_type('Record abstract redacted flag', self.abstract_redacted, bool)

    def get_surnames(self) -> list[str]:
        return [author.surname for author in self.authors]

    def get_author_ids(self) -> set[str]:
        return {author.author_id for author in self.authors if author.author_id}

    def get_primary_msc(self) -> Optional[str]:
        return self.msc[0] if self.msc else None
