import csv
import io
import logging
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Optional, Sequence, Union

from marebito.core.logging import timeit
from marebito.core.utils.atomic_write import write_text_atomic

from ..classifier import Model, accept
from ..corpus import Corpus
from ..exceptions import BadConfigError, ValidationError
from ..index import DEFAULT_CANDIDATE_COUNT, Index
from ..matcher import MatchConfig, match_batch
from ..models import ConfusionCounts, GoldItem, MatchResult, PenaltyParams
from .metrics import count_outcomes, informedness

CSV_COLUMNS = ('threshold', 'alpha', 'beta', 'tp', 'fm', 'fn', 'fp', 'tn', 'informedness')
DEFAULT_PENALTIES = (PenaltyParams(1, 1), PenaltyParams(2, 2), PenaltyParams(5, 5))
RANGE_SEPARATOR = ':'
LIST_SEPARATOR = ','

logger = logging.getLogger(__name__)


def parse_decimal(value: str) -> Decimal:
    try:
        decimal = Decimal(value.strip())
    except InvalidOperation as ex:
        raise BadConfigError(f'Not a number: {value!r}') from ex

    if not decimal.is_finite():
        raise BadConfigError(f'Not a finite number: {value!r}')

    return decimal


def parse_thresholds(text: str) -> list[float]:
    """
    Parse "start:end:step" (both ends inclusive when the step divides the range) or a comma
    separated list. Decimal arithmetic keeps "0.5:1.0:0.05" at exactly 11 values.
    """
    if RANGE_SEPARATOR in text:
        parts = text.split(RANGE_SEPARATOR)
        if len(parts) != 3:
            raise BadConfigError(f'Threshold range must look like start:end:step, got {text!r}')

        start, end, step = map(parse_decimal, parts)
        if step <= 0:
            raise BadConfigError('Threshold step must be positive')
        if start > end:
            raise BadConfigError('Threshold range start must not exceed its end')

        count = int((end - start) / step) + 1
        thresholds = [float(start + step * position) for position in range(count)]
    else:
        thresholds = [float(parse_decimal(part)) for part in text.split(LIST_SEPARATOR) if part.strip()]

    if not thresholds:
        raise BadConfigError('At least one threshold is required')
    if any(threshold < 0 for threshold in thresholds):
        raise BadConfigError('Thresholds must not be negative')
    if thresholds != sorted(thresholds):
        raise BadConfigError('Thresholds must be sorted ascending')

    return thresholds


def parse_penalty(text: str) -> PenaltyParams:
    parts = text.split(LIST_SEPARATOR)
    if len(parts) != 2:
        raise BadConfigError(f'Penalty must look like alpha,beta, got {text!r}')

    params = PenaltyParams(alpha=float(parse_decimal(parts[0])), beta=float(parse_decimal(parts[1])))
    try:
        params.validate()
    except ValidationError as ex:
        raise BadConfigError(str(ex)) from ex

    return params


def parse_penalties(texts: Sequence[str]) -> list[PenaltyParams]:
    return [parse_penalty(text) for text in texts]


@dataclass(frozen=True)
class CachedDecision:
    """Top candidate of one gold item, scored once and reinterpreted for every threshold."""

    expected_id: Optional[int]
    top_id: Optional[int]
    top_score: Optional[float]

    @classmethod
    def from_result(cls, item: GoldItem, result: MatchResult) -> 'CachedDecision':
        top = result.get_top()
        return cls(
            expected_id=item.expected_id,
            top_id=top.record_id if top else None,
            top_score=top.score if top else None,
        )

    def get_matched_id(self, threshold: float) -> Optional[int]:
        if self.top_score is not None and accept(self.top_score, threshold):
            return self.top_id

        return None


@dataclass(frozen=True)
class SweepPoint:
    threshold: float
    params: PenaltyParams
    counts: ConfusionCounts
    informedness: float

    def to_row(self) -> dict:
        return {
            'threshold': self.threshold,
            'alpha': self.params.alpha,
            'beta': self.params.beta,
            'tp': self.counts.tp,
            'fm': self.counts.fm,
            'fn': self.counts.fn,
            'fp': self.counts.fp,
            'tn': self.counts.tn,
            'informedness': self.informedness,
        }


@dataclass
class SweepCurve:
    """Informedness against minimum score, one curve per penalty pair."""

    thresholds: list[float] = field(default_factory=list)
    params_list: list[PenaltyParams] = field(default_factory=list)
    points: list[SweepPoint] = field(default_factory=list)

    def get_curve(self, params: PenaltyParams) -> list[tuple[float, float]]:
        return [(point.threshold, point.informedness) for point in self.points if point.params == params]

    def get_counts(self, threshold: float) -> Optional[ConfusionCounts]:
        return next((point.counts for point in self.points if point.threshold == threshold), None)

    def to_rows(self) -> list[dict]:
        return [point.to_row() for point in self.points]


def score_gold(
    model: Model, gold: Sequence[GoldItem], index: Index, corpus: Corpus, k: int = DEFAULT_CANDIDATE_COUNT
) -> list[CachedDecision]:
    # min_score is irrelevant here: only the top candidate and its score are cached
    results = match_batch([item.input for item in gold], index, corpus, model, MatchConfig(k=k, min_score=1.0))
    return [CachedDecision.from_result(item, result) for item, result in zip(gold, results)]


def sweep_decisions(decisions: Sequence[CachedDecision], thresholds: Sequence[float],
                    params_list: Sequence[PenaltyParams]) -> SweepCurve:
    curve = SweepCurve(thresholds=list(thresholds), params_list=list(params_list))
    counts_by_threshold = [
        count_outcomes((decision.expected_id, decision.get_matched_id(threshold)) for decision in decisions)
        for threshold in thresholds
    ]
    for params in params_list:
        for threshold, counts in zip(thresholds, counts_by_threshold):
            curve.points.append(
                SweepPoint(
                    threshold=threshold, params=params, counts=counts, informedness=informedness(counts, params)
                )
            )

    return curve


@timeit(logger=logger)
def threshold_sweep(
    model: Model,
    gold: Sequence[GoldItem],
    index: Index,
    corpus: Corpus,
    thresholds: Sequence[float],
    params_list: Sequence[PenaltyParams] = DEFAULT_PENALTIES,
    k: int = DEFAULT_CANDIDATE_COUNT,
) -> SweepCurve:
    """Score every gold item once, then apply each threshold to the cached top scores."""
    return sweep_decisions(score_gold(model, gold, index, corpus, k), thresholds, params_list)


def format_number(value) -> str:
    return repr(float(value)) if isinstance(value, float) else str(value)


def render_sweep_csv(curve: SweepCurve) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for row in curve.to_rows():
        writer.writerow([format_number(row[column]) for column in CSV_COLUMNS])

    return buffer.getvalue()


def write_sweep_csv(curve: SweepCurve, path: Union[str, Path]):
    write_text_atomic(path, render_sweep_csv(curve))
    logger.info('Wrote %s sweep rows to %s', len(curve.points), path)
