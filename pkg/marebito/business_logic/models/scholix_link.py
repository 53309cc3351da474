from dataclasses import dataclass
from datetime import date

from marebito.business_logic.exceptions import ParseError, ValidationError
from marebito.business_logic.validators import validate_not_blank, validate_type, validate_url
from marebito.core.logging import validates

from .base import BaseDataclass

DEFAULT_RELATIONSHIP = 'References'
FLAT_FIELD_NAMES = (
    'source_provider',
    'source_object_id',
    'source_url',
    'target_id',
    'relationship',
    'link_publication_date',
    'link_provider',
)
REQUIRED_FLAT_FIELD_NAMES = frozenset(FLAT_FIELD_NAMES) - {'relationship'}


@dataclass(frozen=True)
class LinkSource(BaseDataclass):
    provider: str
    """External collection, like DLMF or OEIS"""

    object_id: str
    url: str


@dataclass(frozen=True)
class ScholixLink(BaseDataclass):
    """Link from an external source object to a corpus record."""

    source: LinkSource
    target: int
    """Target record id"""

    link_publication_date: date
    link_provider: str
    relationship: str = DEFAULT_RELATIONSHIP

    @validates('link')
    def validate(self):
        for subject, value in (
            ('Link source provider', self.source.provider),
            ('Link source object id', self.source.object_id),
            ('Link relationship', self.relationship),
            ('Link provider', self.link_provider),
        ):
            validate_type(subject, value, str)
            validate_not_blank(subject, value)

        validate_type('Link source URL', self.source.url, str)
        validate_url('Link source URL', self.source.url)
        validate_type('Link target id', self.target, int)

    @classmethod
    def from_flat_dict(cls, dict_, line=None):
        unknown_keys = dict_.keys() - set(FLAT_FIELD_NAMES)
        if unknown_keys:
            raise ParseError('Unknown key: {}'.format(', '.join(sorted(unknown_keys))), line=line)

        missing_keys = REQUIRED_FLAT_FIELD_NAMES - dict_.keys()
        if missing_keys:
            raise ParseError('Missing keys: {}'.format(', '.join(sorted(missing_keys))), line=line)

        try:
            publication_date = date.fromisoformat(dict_['link_publication_date'])
        except (TypeError, ValueError) as ex:
            raise ParseError(f'Invalid link publication date: {ex}', line=line) from ex

        target = dict_['target_id']
        if not isinstance(target, int) or isinstance(target, bool):
            raise ParseError('Target id must be integer', line=line)

        return cls(
            source=LinkSource(
                provider=dict_['source_provider'],
                object_id=str(dict_['source_object_id']),
                url=dict_['source_url'],
            ),
            target=target,
            relationship=dict_.get('relationship', DEFAULT_RELATIONSHIP),
            link_publication_date=publication_date,
            link_provider=dict_['link_provider'],
        )

    def to_flat_dict(self):
        return {
            'source_provider': self.source.provider,
            'source_object_id': self.source.object_id,
            'source_url': self.source.url,
            'target_id': self.target,
            'relationship': self.relationship,
            'link_publication_date': self.link_publication_date.isoformat(),
            'link_provider': self.link_provider,
        }

    def get_sort_key(self):
        return self.target, self.source.object_id

    def is_valid(self):
        try:
            self.validate()
        except ValidationError:
            return False

        return True
