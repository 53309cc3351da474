"""
Similarity features between an extracted reference and a candidate record. The order of
`FEATURE_NAMES` is part of the model file contract.
"""
import logging
from typing import Optional

from rapidfuzz.distance import Levenshtein

from .index.normalization import normalize
from .models import FEATURE_NAMES, BibRecord, ExtractedReference, FeatureVector

NEUTRAL_VALUE = 0.5

logger = logging.getLogger(__name__)


def jaccard(left: set, right: set) -> Optional[float]:
    union = left | right
    if not union:
        return None

    return len(left & right) / len(union)


def title_jaccard(query_title: Optional[str], record_title: Optional[str]) -> float:
    if not query_title or not record_title:
        return 0.0

    return jaccard(set(normalize(query_title)), set(normalize(record_title))) or 0.0


def title_edit_similarity(query_title: Optional[str], record_title: Optional[str]) -> float:
    if not query_title or not record_title:
        return 0.0

    query_joined = ' '.join(normalize(query_title))
    record_joined = ' '.join(normalize(record_title))
    if not query_joined or not record_joined:
        return 0.0

    return Levenshtein.normalized_similarity(query_joined, record_joined)


def author_overlap(query_surnames: list[str], record_surnames: list[str]) -> float:
    if not query_surnames:
        return 0.0

    shared = {surname.casefold() for surname in query_surnames} & {surname.casefold() for surname in record_surnames}
    return len(shared) / max(len(query_surnames), 1)


def year_similarity(query_year: Optional[int], record_year: Optional[int]) -> float:
    if query_year is None or record_year is None:
        return NEUTRAL_VALUE

    difference = abs(query_year - record_year)
    if difference == 0:
        return 1.0

    return 0.5 if difference == 1 else 0.0


def exact_match(query_value: Optional[str], record_value: Optional[str]) -> float:
    if query_value is None or record_value is None:
        return NEUTRAL_VALUE

    return 1.0 if query_value.strip() == record_value.strip() else 0.0


def serial_similarity(container: Optional[str], serial: Optional[str]) -> float:
    if not container or not serial:
        return NEUTRAL_VALUE

    similarity = jaccard(set(normalize(container)), set(normalize(serial)))
    return NEUTRAL_VALUE if similarity is None else similarity


def normalize_retrieval_score(retrieval_score: float, max_retrieval_score: float) -> float:
    if max_retrieval_score <= 0:
        return 0.0

    return min(max(retrieval_score / max_retrieval_score, 0.0), 1.0)


def feature_vector(
    query: ExtractedReference, record: BibRecord, retrieval_score: float, max_retrieval_score: float
) -> FeatureVector:
    values = {
        'title_jaccard': title_jaccard(query.title, record.title),
        'title_edit_sim': title_edit_similarity(query.title, record.title),
        'author_overlap': author_overlap(query.get_surnames(), record.get_surnames()),
        'year_sim': year_similarity(query.year, record.year),
        'volume_match': exact_match(query.volume, record.volume),
        'pages_match': exact_match(query.pages, record.pages),
        'serial_sim': serial_similarity(query.container, record.serial),
        'retrieval_score_norm': normalize_retrieval_score(retrieval_score, max_retrieval_score),
    }
    return FeatureVector(values=tuple(float(values[name]) for name in FEATURE_NAMES))
