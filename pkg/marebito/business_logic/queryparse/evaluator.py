import logging
from typing import Optional

from ..corpus import Corpus
from ..enums import QueryField
from ..exceptions import QuerySyntaxError, UnknownFieldError
from ..index import Index, normalize
from ..models import BibRecord
from .ast import And, FieldTerm, Not, Or, QueryNode
from .grammar import convert_value

STRUCTURED_FIELD_ORDER = (
    QueryField.AUTHOR,
    QueryField.TITLE,
    QueryField.PUBLICATION_YEAR,
    QueryField.SOURCE,
    QueryField.CLASSIFICATION,
    QueryField.DOCUMENT_ID,
)

logger = logging.getLogger(__name__)


def record_matches(term: FieldTerm, record: BibRecord) -> bool:
    field = term.field
    if field == QueryField.DOCUMENT_ID:
        return record.id == term.value

    if field == QueryField.PUBLICATION_YEAR:
        return record.year in term.value

    if field == QueryField.CLASSIFICATION:
        prefix = term.value.upper()
        return bool(prefix) and any(code.startswith(prefix) for code in record.msc)

    tokens = set(normalize(term.value))
    if not tokens:
        return False

    if field == QueryField.TITLE:
        return tokens <= set(normalize(record.title))

    if field == QueryField.SOURCE:
        return tokens <= set(normalize(record.serial or ''))

    assert field == QueryField.AUTHOR
    return any(tokens <= set(normalize(surname)) for surname in record.get_surnames())


def get_posting_ids(index: Index, tokens) -> set[int]:
    ids: Optional[set[int]] = None
    for token in tokens:
        token_ids = {record_id for record_id, _ in index.postings.get(token, ())}
        ids = token_ids if ids is None else ids & token_ids

    return ids or set()


def evaluate_term(term: FieldTerm, corpus: Corpus, index: Optional[Index]) -> set[int]:
    if term.field == QueryField.DOCUMENT_ID:
        return {term.value} if term.value in corpus else set()

    # Title and surname tokens are indexed together, so postings narrow the scan but do not decide
    if index is not None and term.field in (QueryField.TITLE, QueryField.AUTHOR):
        tokens = normalize(term.value)
        if not tokens:
            return set()

        records = (corpus.get_record(record_id) for record_id in get_posting_ids(index, tokens))
        return {record.id for record in records if record is not None and record_matches(term, record)}

    return {record.id for record in corpus if record_matches(term, record)}


def evaluate_query(node: QueryNode, corpus: Corpus, index: Optional[Index] = None) -> set[int]:
    """Set of matching record ids. `Not` complements against all corpus ids."""
    if isinstance(node, FieldTerm):
        return evaluate_term(node, corpus, index)

    if isinstance(node, Not):
        return set(corpus.get_ids()) - evaluate_query(node.operand, corpus, index)

    left = evaluate_query(node.left, corpus, index)
    if isinstance(node, And):
        return left & evaluate_query(node.right, corpus, index) if left else set()

    assert isinstance(node, Or)
    return left | evaluate_query(node.right, corpus, index)


def compile_structured(params: dict) -> QueryNode:
    """Combine structured search parameters (field code to value) into an And-chain."""
    unknown = sorted(params.keys() - {field.value for field in QueryField})
    if unknown:
        raise UnknownFieldError(unknown[0], 0)

    terms = [
        FieldTerm(field, convert_value(field, str(params[field.value])))
        for field in STRUCTURED_FIELD_ORDER
        if params.get(field.value) not in (None, '')
    ]
    if not terms:
        raise QuerySyntaxError('At least one search field is required', 0)

    node = terms[0]
    for term in terms[1:]:
        node = And(node, term)

    return node
