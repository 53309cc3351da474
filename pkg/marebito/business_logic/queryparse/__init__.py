from .ast import And, FieldTerm, Not, Or, QueryNode, YearRange, to_query_string  # noqa: F401
from .evaluator import compile_structured, evaluate_query, record_matches  # noqa: F401
from .grammar import parse_query  # noqa: F401
