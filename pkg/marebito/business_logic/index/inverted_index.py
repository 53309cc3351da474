import logging
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from marebito.core.logging import timeit

from ..corpus import Corpus
from ..models import BibRecord, Candidate, ExtractedReference
from .normalization import normalize, normalize_surnames

BM25_K1 = 1.2
BM25_B = 0.75
DEFAULT_CANDIDATE_COUNT = 20

logger = logging.getLogger(__name__)


def get_record_tokens(record: BibRecord) -> list[str]:
    return normalize(record.title) + normalize_surnames(record.get_surnames())


def get_query_tokens(query: ExtractedReference) -> list[str]:
    """Distinct query tokens in first-seen order: title tokens, then author surname tokens."""
    tokens = normalize(query.title or '') + normalize_surnames(query.get_surnames())
    return list(dict.fromkeys(tokens))


def bm25_idf(doc_count: int, document_frequency: int) -> float:
    return math.log(1 + (doc_count - document_frequency + 0.5) / (document_frequency + 0.5))


def bm25_term_weight(term_frequency: int, doc_length: int, avg_doc_length: float) -> float:
    length_ratio = doc_length / avg_doc_length if avg_doc_length else 0
    return term_frequency * (BM25_K1 + 1) / (term_frequency + BM25_K1 * (1 - BM25_B + BM25_B * length_ratio))


@dataclass
class Index:
    """Inverted index over record title and author surname tokens, ranked with BM25."""

    postings: dict[str, list[tuple[int, int]]] = field(default_factory=dict)
    """Token to (record id, term frequency) pairs in ascending record id order"""

    doc_lengths: dict[int, int] = field(default_factory=dict)
    corpus_generation: Optional[str] = None

    @property
    def doc_count(self) -> int:
        return len(self.doc_lengths)

    @cached_property
    def avg_doc_length(self) -> float:
        doc_count = self.doc_count
        return sum(self.doc_lengths.values()) / doc_count if doc_count else 0.0

    def get_document_frequency(self, token: str) -> int:
        return len(self.postings.get(token, ()))

    def score_tokens(self, tokens: Iterable[str]) -> dict[int, float]:
        doc_count = self.doc_count
        avg_doc_length = self.avg_doc_length
        doc_lengths = self.doc_lengths

        scores: dict[int, float] = defaultdict(float)
        for token in dict.fromkeys(tokens):
            postings = self.postings.get(token)
            if not postings:
                continue

            idf = bm25_idf(doc_count, len(postings))
            for record_id, term_frequency in postings:
                scores[record_id] += idf * bm25_term_weight(term_frequency, doc_lengths[record_id], avg_doc_length)

        return scores

    def get_candidates(self, query: ExtractedReference, k: int = DEFAULT_CANDIDATE_COUNT) -> list[Candidate]:
        return self.get_candidates_for_tokens(get_query_tokens(query), k)

    def get_candidates_for_tokens(self, tokens: Iterable[str], k: int = DEFAULT_CANDIDATE_COUNT) -> list[Candidate]:
        if k < 1:
            raise ValueError('k must be at least 1')

        scores = self.score_tokens(tokens)
        ranked = sorted(scores.items(), key=lambda item: (-item[1], item[0]))
        return [Candidate(record_id=record_id, retrieval_score=score) for record_id, score in ranked[:k]]


@timeit(logger=logger)
def build_index(corpus: Corpus) -> Index:
    if not corpus.is_frozen:
        logger.warning('Building index over a corpus that is not frozen')

    postings: dict[str, list[tuple[int, int]]] = defaultdict(list)
    doc_lengths = {}
    for record in corpus:  # ascending id order keeps posting lists sorted
        tokens = get_record_tokens(record)
        doc_lengths[record.id] = len(tokens)
        for token, term_frequency in Counter(tokens).items():
            postings[token].append((record.id, term_frequency))

    index = Index(postings=dict(postings), doc_lengths=doc_lengths, corpus_generation=corpus.generation)
    logger.info('Indexed %s records, %s distinct tokens', index.doc_count, len(index.postings))
    return index


def candidates(index: Index, query: ExtractedReference, k: int = DEFAULT_CANDIDATE_COUNT) -> list[Candidate]:
    return index.get_candidates(query, k)
