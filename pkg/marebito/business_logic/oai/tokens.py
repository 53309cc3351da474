import base64
import binascii
from dataclasses import asdict, dataclass, replace
from typing import Optional

import msgpack

from marebito.core.logging import validates

from ..exceptions import ResumptionTokenError, ValidationError
from ..validators import validate_gte_value, validate_optional_type, validate_type

TOKEN_KEYS = {
    'cursor': 'c',
    'metadata_prefix': 'p',
    'set_spec': 's',
    'from_date': 'f',
    'until_date': 'u',
    'page_size': 'n',
    'generation': 'g',
}


@dataclass(frozen=True)
class ResumptionToken:
    """Complete state of a paginated list request. Valid only for the corpus generation it names."""

    cursor: int
    metadata_prefix: str
    page_size: int
    generation: str
    set_spec: Optional[str] = None
    from_date: Optional[str] = None
    until_date: Optional[str] = None

    def encode(self) -> str:
        packed = msgpack.packb({TOKEN_KEYS[key]: value for key, value in asdict(self).items()}, use_bin_type=True)
        return base64.urlsafe_b64encode(packed).decode('ascii').rstrip('=')

    @classmethod
    def decode(cls, text: str) -> 'ResumptionToken':
        try:
            packed = base64.urlsafe_b64decode(text + '=' * (-len(text) % 4))
            payload = msgpack.unpackb(packed, raw=False)
            token = cls(**{key: payload[short_key] for key, short_key in TOKEN_KEYS.items()})
        except (binascii.Error, ValueError, KeyError, TypeError, msgpack.UnpackException) as ex:
            raise ResumptionTokenError(f'Malformed resumption token: {ex!r}') from ex

        try:
            token.validate()
        except ValidationError as ex:
            raise ResumptionTokenError(f'Malformed resumption token: {ex}') from ex

        return token

    @validates('resumption token')
    def validate(self):
        validate_type('Cursor', self.cursor, int)
        validate_gte_value('Cursor', self.cursor, 0)
        validate_type('Page size', self.page_size, int)
        validate_gte_value('Page size', self.page_size, 1)
        validate_type('Metadata prefix', self.metadata_prefix, str)
        validate_type('Generation', self.generation, str)
        validate_optional_type('Set spec', self.set_spec, str)
        validate_optional_type('From date', self.from_date, str)
        validate_optional_type('Until date', self.until_date, str)

    def get_next(self) -> 'ResumptionToken':
        return replace(self, cursor=self.cursor + self.page_size)
