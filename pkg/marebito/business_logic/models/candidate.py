from dataclasses import dataclass


@dataclass(frozen=True)
class Candidate:
    record_id: int
    retrieval_score: float
    """BM25 score, non-negative"""
