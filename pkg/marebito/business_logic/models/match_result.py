from dataclasses import dataclass, field
from typing import Optional

from .base import BaseDataclass


@dataclass
class RankedCandidate(BaseDataclass):
    record_id: int
    score: float


@dataclass
class MatchResult(BaseDataclass):
    query_raw: str
    matched_id: Optional[int] = None
    score: Optional[float] = None
    """Top candidate score, present whenever at least one candidate was scored"""

    candidates_considered: int = 0
    ranked: list[RankedCandidate] = field(default_factory=list)
    error: Optional[str] = None
    """Name of the per-item error in batch matching"""

    @property
    def is_matched(self):
        return self.matched_id is not None

    def get_top(self) -> Optional[RankedCandidate]:
        return self.ranked[0] if self.ranked else None
