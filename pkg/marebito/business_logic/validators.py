from marebito.core.logging import validates
from marebito.core.utils.misc import is_valid_url, upper_first

from .exceptions import ValidationError
from .msc import is_valid_msc_code

HUMANIZED_TYPE_NAMES = {
    str: 'string',
    int: 'integer',
    bool: 'boolean',
    float: 'number',
    list: 'list',
    dict: 'object',
}

MIN_YEAR = 1500
MAX_YEAR = 2100


def validate_not_empty(subject, value):
    with validates(f'{subject} value'):
        if not value:
            raise ValidationError(upper_first(f'{subject} must be not empty'))


def validate_not_blank(subject, value):
    with validates(f'{subject} value'):
        if not value or not value.strip():
            raise ValidationError(upper_first(f'{subject} must be not empty after whitespace trim'))


def validate_not_none(subject, value):
    with validates(f'{subject} value'):
        if value is None:
            raise ValidationError(upper_first(f'{subject} must be set'))


def validate_type(subject, value, type_):
    with validates(f'{subject} type'):
        # bool is a subclass of int, but never a valid integer value here
        if not isinstance(value, type_) or (isinstance(value, bool) and bool not in _as_tuple(type_)):
            raise ValidationError(upper_first(f'{subject} must be {_humanize_type(type_)}'))


def validate_optional_type(subject, value, type_):
    if value is not None:
        validate_type(subject, value, type_)


def validate_gte_value(subject, value, min_):
    with validates(f'{subject} value'):
        if value < min_:
            raise ValidationError(upper_first(f'{subject} must be greater or equal to {min_}'))


def validate_lte_value(subject, value, max_):
    with validates(f'{subject} value'):
        if value > max_:
            raise ValidationError(upper_first(f'{subject} must be less or equal to {max_}'))


def validate_in_range(subject, value, min_, max_):
    validate_gte_value(subject, value, min_)
    validate_lte_value(subject, value, max_)


def validate_in(subject, value, value_set):
    with validates(f'{subject} value'):
        if value not in value_set:
            value_set_str = ', '.join(map(str, value_set))
            raise ValidationError(upper_first(f'{subject} must be one of {value_set_str}'))


def validate_greater_than_zero(subject, value):
    with validates(f'{subject} value'):
        if value <= 0:
            raise ValidationError(upper_first(f'{subject} must be greater than zero'))


def validate_year(subject, value):
    validate_type(subject, value, int)
    validate_in_range(subject, value, MIN_YEAR, MAX_YEAR)


def validate_probability(subject, value):
    validate_type(subject, value, (int, float))
    validate_in_range(subject, value, 0, 1)


def validate_url(subject, value):
    with validates(f'{subject} value'):
        validate_not_empty(subject, value)
        if not is_valid_url(value):
            raise ValidationError(upper_first(f'{subject} must be a URL'))


def validate_msc_code(subject, value):
    with validates(f'{subject} value'):
        if not is_valid_msc_code(value):
            raise ValidationError(upper_first(f'{subject} must be an MSC code (like "11", "33C" or "65F10")'))


def _as_tuple(type_):
    return type_ if isinstance(type_, tuple) else (type_,)


def _humanize_type(type_):
    return ' or '.join(HUMANIZED_TYPE_NAMES.get(item, item.__name__) for item in _as_tuple(type_))
