"""
Search query language:

    term  := [field ":"] (word | "quoted phrase")
    expr  := term | "(" expr ")" | "!" expr | expr "&" expr | expr "|" expr

`!` binds tighter than `&`, which binds tighter than `|`; both binary operators are
left-associative. Fields are au, ti, py, so, cc and an; a bare word searches ti.
"""
import logging
import re
from typing import Optional

import pyparsing as pp

from ..enums import QueryField
from ..exceptions import QuerySyntaxError, UnknownFieldError
from .ast import And, FieldTerm, Not, Or, QueryNode, YearRange

YEAR_VALUE_RE = re.compile(r'(?P<start>\d{4})(?:\s*-\s*(?P<end>\d{4}))?')
DEFAULT_FIELD = QueryField.TITLE

logger = logging.getLogger(__name__)


def get_byte_offset(text: str, loc: int) -> int:
    return len(text[:loc].encode('utf-8'))


def convert_value(field: QueryField, value: str, offset: int = 0):
    if field == QueryField.PUBLICATION_YEAR:
        match = YEAR_VALUE_RE.fullmatch(value.strip())
        if not match:
            raise QuerySyntaxError(f'Expected a year or a year range, got {value!r}', offset)

        start = int(match['start'])
        end = int(match['end'] or start)
        if start > end:
            raise QuerySyntaxError(f'Year range {value!r} ends before it starts', offset)

        return YearRange(start, end)

    if field == QueryField.DOCUMENT_ID:
        if not value.strip().isdigit():
            raise QuerySyntaxError(f'Expected a document id, got {value!r}', offset)

        return int(value)

    return value


def make_field_term(field_name: Optional[str], value: str, offset: int) -> FieldTerm:
    if field_name is None:
        field = DEFAULT_FIELD
    else:
        try:
            field = QueryField(field_name)
        except ValueError:
            raise UnknownFieldError(field_name, offset) from None

    return FieldTerm(field, convert_value(field, value, offset))


def fold_binary(node_class):

    def parse_action(tokens):
        operands = tokens[0][::2]
        node = operands[0]
        for operand in operands[1:]:
            node = node_class(node, operand)

        return node

    return parse_action


def fold_not(tokens):
    *operators, node = tokens[0]
    for _ in operators:
        node = Not(node)

    return node


def build_grammar() -> pp.ParserElement:
    field_name = pp.Regex(r'[A-Za-z][A-Za-z0-9_]*(?=:)')('field') + pp.Suppress(':')
    word = pp.Regex(r'[^\s()&|!":\\]+')
    phrase = pp.QuotedString('"', esc_char='\\', convert_whitespace_escapes=False)
    value = (phrase | word)('value')
    term = pp.Opt(field_name) + value

    def term_action(text, loc, tokens):
        return make_field_term(tokens.get('field'), tokens['value'], get_byte_offset(text, loc))

    term.set_parse_action(term_action)

    expression = pp.infix_notation(
        term,
        [
            (pp.Literal('!'), 1, pp.OpAssoc.RIGHT, fold_not),
            (pp.Literal('&'), 2, pp.OpAssoc.LEFT, fold_binary(And)),
            (pp.Literal('|'), 2, pp.OpAssoc.LEFT, fold_binary(Or)),
        ],
    )
    return expression.parse_with_tabs()


GRAMMAR = build_grammar()


def parse_query(query: str) -> QueryNode:
    if not query or not query.strip():
        raise QuerySyntaxError('Query is empty', 0)

    try:
        return GRAMMAR.parse_string(query, parse_all=True)[0]
    except pp.ParseBaseException as ex:
        offset = get_byte_offset(query, ex.loc)
        logger.debug('Syntax error in query %r at byte %s: %s', query, offset, ex.msg)
        raise QuerySyntaxError(f'Syntax error at byte {offset}: {ex.msg}', offset) from ex
