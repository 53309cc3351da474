import logging

from marebito.business_logic.exceptions import InvalidFieldError, ValidationError
from marebito.business_logic.validators import MAX_YEAR, MIN_YEAR
from marebito.core.utils.hashing import normalize_dict

from ..models import AuthorName, ExtractedReference
from .authors import parse_author_names

STRUCTURED_FIELD_NAMES = frozenset(('authors', 'title', 'container', 'year', 'volume', 'pages', 'doi'))
TEXT_FIELD_NAMES = ('title', 'container', 'volume', 'pages', 'doi')

logger = logging.getLogger(__name__)


def coerce_year(value):
    if value is None or value == '':
        return None

    if isinstance(value, bool):
        raise InvalidFieldError('year', 'Year must be an integer')

    try:
        year = int(str(value).strip())
    except ValueError as ex:
        raise InvalidFieldError('year', f'Year must be an integer, got {value!r}') from ex

    if not MIN_YEAR <= year <= MAX_YEAR:
        raise InvalidFieldError('year', f'Year must be in [{MIN_YEAR}, {MAX_YEAR}], got {year}')

    return year


def coerce_text(field_name, value):
    if value is None:
        return None

    if isinstance(value, (int, float)) and not isinstance(value, bool):
        value = str(value)

    if not isinstance(value, str):
        raise InvalidFieldError(field_name, f'Field {field_name} must be text')

    return value.strip() or None


def coerce_author(value) -> list[AuthorName]:
    if isinstance(value, str):
        return parse_author_names(value)

    if isinstance(value, dict):
        try:
            author = AuthorName.deserialize_from_dict(value)
            author.validate()
        except (ValidationError, TypeError) as ex:
            raise InvalidFieldError('authors', f'Invalid author: {ex}') from ex

        return [author]

    raise InvalidFieldError('authors', 'Authors must be text, a list of names or a list of objects')


def coerce_authors(value) -> list[AuthorName]:
    if value is None:
        return []

    if isinstance(value, list):
        return [author for item in value for author in coerce_author(item)]

    return coerce_author(value)


def extract_structured(fields: dict) -> ExtractedReference:
    """Pass structured fields through with validation. `raw` is the canonical JSON of `fields`."""
    if not isinstance(fields, dict):
        raise InvalidFieldError('input', 'Structured input must be a key-value map')

    unknown_keys = fields.keys() - STRUCTURED_FIELD_NAMES
    if unknown_keys:
        field_name = sorted(unknown_keys)[0]
        raise InvalidFieldError(field_name, f'Unknown field: {field_name}')

    kwargs = {field_name: coerce_text(field_name, fields.get(field_name)) for field_name in TEXT_FIELD_NAMES}
    reference = ExtractedReference(
        raw=normalize_dict(fields).decode('utf-8'),
        authors=coerce_authors(fields.get('authors')),
        year=coerce_year(fields.get('year')),
        **kwargs,
    )
    logger.debug('Structured input %r passed through as %r', fields, reference)
    return reference
