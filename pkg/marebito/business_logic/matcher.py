import logging
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Union

from django.conf import settings

from marebito.core.utils.hashing import normalize_dict

from .classifier import Model, TrainingSet, accept
from .constants import DEFAULT_MIN_SCORE
from .corpus import Corpus
from .enums import MatchLabel
from .exceptions import EmptyInputError, InvalidFieldError, MarebitoError, UnparseableError
from .features import feature_vector
from .index import DEFAULT_CANDIDATE_COUNT, Index
from .models import ExtractedReference, FeatureVector, GoldItem, MatchResult, RankedCandidate
from .refextract import extract_fields, extract_structured
from .validators import validate_greater_than_zero, validate_probability, validate_type

MatchInput = Union[str, dict]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatchConfig:
    k: int = DEFAULT_CANDIDATE_COUNT
    """Candidates retrieved per query"""

    min_score: float = DEFAULT_MIN_SCORE

    def validate(self):
        validate_type('Candidate count', self.k, int)
        validate_greater_than_zero('Candidate count', self.k)
        validate_probability('Minimum score', self.min_score)

    @classmethod
    def from_settings(cls, k: Optional[int] = None, min_score: Optional[float] = None) -> 'MatchConfig':
        marebito_settings = settings.MAREBITO
        config = cls(
            k=marebito_settings.get('k', DEFAULT_CANDIDATE_COUNT) if k is None else k,
            min_score=marebito_settings.get('min_score', DEFAULT_MIN_SCORE) if min_score is None else min_score,
        )
        config.validate()
        return config


def get_error_name(exception: Exception) -> str:
    return exception.__class__.__name__.removesuffix('Error')


def get_query_raw(input_: Any) -> str:
    if isinstance(input_, dict):
        return normalize_dict(input_).decode('utf-8')

    return input_ if isinstance(input_, str) else repr(input_)


def prepare_query(input_: MatchInput) -> ExtractedReference:
    """
    Turn a citation string or a structured field map into an extracted reference. A citation
    the extractor cannot parse falls back to its whole text used as the title.
    """
    if isinstance(input_, dict):
        if not input_:
            raise EmptyInputError()

        return extract_structured(input_)

    if not isinstance(input_, str):
        raise InvalidFieldError('input', 'Input must be a citation string or a key-value map')

    if not input_.strip():
        raise EmptyInputError()

    try:
        return extract_fields(input_)
    except UnparseableError:
        logger.debug('Falling back to bag-of-words retrieval for %r', input_)
        return ExtractedReference(raw=input_, title=input_)


def get_candidate_features(query: ExtractedReference, index: Index, corpus: Corpus,
                           k: int) -> list[tuple[int, FeatureVector]]:
    candidates = index.get_candidates(query, k)
    if not candidates:
        return []

    max_retrieval_score = candidates[0].retrieval_score
    features = []
    for candidate in candidates:
        record = corpus.get_record(candidate.record_id)
        if record is None:
            logger.warning('Index refers to record %s missing from the corpus', candidate.record_id)
            continue

        features.append(
            (record.id, feature_vector(query, record, candidate.retrieval_score, max_retrieval_score))
        )

    return features


def rank_candidates(query: ExtractedReference, index: Index, corpus: Corpus, model: Model,
                    k: int) -> list[RankedCandidate]:
    ranked = [
        RankedCandidate(record_id=record_id, score=model.score(features))
        for record_id, features in get_candidate_features(query, index, corpus, k)
    ]
    ranked.sort(key=lambda candidate: (-candidate.score, candidate.record_id))
    return ranked


def decide(ranked: list[RankedCandidate], min_score: float) -> Optional[int]:
    """The argmax candidate is the match iff its score reaches `min_score`."""
    if ranked and accept(ranked[0].score, min_score):
        return ranked[0].record_id

    return None


def match_one(
    input_: MatchInput, index: Index, corpus: Corpus, model: Model, config: Optional[MatchConfig] = None
) -> MatchResult:
    """
    Match one citation string or structured map. Only `EmptyInputError` is raised; any other
    problem with the input yields a result without a match and with `error` set.
    """
    config = config or MatchConfig()
    query_raw = get_query_raw(input_)
    try:
        query = prepare_query(input_)
    except EmptyInputError:
        raise
    except MarebitoError as ex:
        logger.debug('Could not prepare query %r: %s', query_raw, ex)
        return MatchResult(query_raw=query_raw, error=get_error_name(ex))

    ranked = rank_candidates(query, index, corpus, model, config.k)
    return MatchResult(
        query_raw=query_raw,
        matched_id=decide(ranked, config.min_score),
        score=ranked[0].score if ranked else None,
        candidates_considered=len(ranked),
        ranked=ranked,
    )


def match_batch(
    inputs: Iterable[MatchInput],
    index: Index,
    corpus: Corpus,
    model: Model,
    config: Optional[MatchConfig] = None
) -> list[MatchResult]:
    """Match every input in order. Per-item errors are recorded in the results, never raised."""
    config = config or MatchConfig()
    results = []
    for input_ in inputs:
        try:
            result = match_one(input_, index, corpus, model, config)
        except MarebitoError as ex:
            result = MatchResult(query_raw=get_query_raw(input_), error=get_error_name(ex))

        results.append(result)

    logger.debug('Matched batch of %s inputs', len(results))
    return results


def build_training_set(gold_items: Iterable[GoldItem], index: Index, corpus: Corpus,
                       k: int = DEFAULT_CANDIDATE_COUNT) -> TrainingSet:
    """Every retrieved candidate of a gold item is a row, labelled match iff it is the expected record."""
    training_set = TrainingSet()
    for item in gold_items:
        try:
            query = prepare_query(item.input)
        except MarebitoError as ex:
            logger.warning('Skipping gold item %r: %s', get_query_raw(item.input), ex)
            continue

        for record_id, features in get_candidate_features(query, index, corpus, k):
            label = MatchLabel.MATCH if record_id == item.expected_id else MatchLabel.NO_MATCH
            training_set.add(features, label)

    return training_set
