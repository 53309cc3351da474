import re
from dataclasses import dataclass
from typing import Union

from ..enums import QueryField


@dataclass(frozen=True)
class YearRange:
    start: int
    end: int

    def __contains__(self, year):
        return year is not None and self.start <= year <= self.end

    def __str__(self):
        return str(self.start) if self.start == self.end else f'{self.start}-{self.end}'


@dataclass(frozen=True)
class FieldTerm:
    field: QueryField
    value: Union[str, int, YearRange]
    """Text, a document id for `an`, a year range for `py`"""


@dataclass(frozen=True)
class And:
    left: 'QueryNode'
    right: 'QueryNode'


@dataclass(frozen=True)
class Or:
    left: 'QueryNode'
    right: 'QueryNode'


@dataclass(frozen=True)
class Not:
    operand: 'QueryNode'


QueryNode = Union[FieldTerm, And, Or, Not]

BARE_VALUE_RE = re.compile(r'[^\s()&|!":\\]+')


def quote_value(value) -> str:
    text = str(value)
    if BARE_VALUE_RE.fullmatch(text):
        return text

    escaped = text.replace('\\', '\\\\').replace('"', '\\"')
    return f'"{escaped}"'


def to_query_string(node: QueryNode) -> str:
    """Canonical form: every field named, every binary operation parenthesized."""
    if isinstance(node, FieldTerm):
        return f'{node.field.value}:{quote_value(node.value)}'

    if isinstance(node, Not):
        return '!' + to_query_string(node.operand)

    operator = '&' if isinstance(node, And) else '|'
    return f'({to_query_string(node.left)} {operator} {to_query_string(node.right)})'
