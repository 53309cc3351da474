import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from marebito.core.utils.misc import utcnow_iso

from ..classifier import Model, ModelConfig, train
from ..corpus import Corpus
from ..index import Index
from ..matcher import MatchConfig, build_training_set, match_batch
from ..models import ConfusionCounts, GoldItem, MatchResult, PenaltyParams
from ..models.base import BaseDataclass
from .metrics import confusion_counts, informedness
from .sweep import DEFAULT_PENALTIES

logger = logging.getLogger(__name__)


@dataclass
class PenalizedInformedness(BaseDataclass):
    alpha: float
    beta: float
    informedness: float


@dataclass
class EvaluationReport(BaseDataclass):
    counts: ConfusionCounts
    informedness: list[PenalizedInformedness] = field(default_factory=list)
    min_score: Optional[float] = None
    split: Optional[str] = None
    item_count: int = 0
    rp_zero: bool = False
    """No real positives: TP/RP and FM/RP terms were taken as 0"""

    rn_zero: bool = False
    """No real negatives: the FP/RN term was taken as 0"""

    model_kind: Optional[str] = None
    generated_at: Optional[str] = None

    def get_informedness(self, alpha: float, beta: float) -> Optional[float]:
        return next((
            item.informedness for item in self.informedness if item.alpha == alpha and item.beta == beta
        ), None)

    def to_dict(self) -> dict:
        dict_ = self.serialize_to_dict(skip_none_values=False)
        dict_['counts'].update(rp=self.counts.rp, rn=self.counts.rn, n=self.counts.n)
        return dict_


def make_report(
    results: Sequence[tuple[GoldItem, MatchResult]],
    params_list: Sequence[PenaltyParams] = DEFAULT_PENALTIES,
    deterministic=False,
    **kwargs,
) -> EvaluationReport:
    counts = confusion_counts(results)
    report = EvaluationReport(
        counts=counts,
        informedness=[
            PenalizedInformedness(alpha=params.alpha, beta=params.beta, informedness=informedness(counts, params))
            for params in params_list
        ],
        item_count=len(results),
        rp_zero=counts.rp == 0,
        rn_zero=counts.rn == 0,
        generated_at=utcnow_iso(deterministic=deterministic),
        **kwargs,
    )
    if report.rp_zero or report.rn_zero:
        logger.warning('Gold set lacks a class (rp_zero=%s, rn_zero=%s)', report.rp_zero, report.rn_zero)

    return report


def evaluate(
    model: Model,
    gold: Sequence[GoldItem],
    index: Index,
    corpus: Corpus,
    config: Optional[MatchConfig] = None,
    params_list: Sequence[PenaltyParams] = DEFAULT_PENALTIES,
    split: Optional[str] = None,
    deterministic=False,
) -> EvaluationReport:
    config = config or MatchConfig()
    results = match_batch([item.input for item in gold], index, corpus, model, config)
    return make_report(
        list(zip(gold, results)),
        params_list,
        deterministic=deterministic,
        min_score=config.min_score,
        split=split,
        model_kind=model.kind.value,
    )


@dataclass
class ModelComparison:
    config: ModelConfig
    model: Model
    report: EvaluationReport


def compare_models(
    configs: Sequence[ModelConfig],
    train_items: Sequence[GoldItem],
    eval_items: Sequence[GoldItem],
    index: Index,
    corpus: Corpus,
    match_config: Optional[MatchConfig] = None,
    params_list: Sequence[PenaltyParams] = DEFAULT_PENALTIES,
    deterministic=False,
) -> list[ModelComparison]:
    """Train one model per config on `train_items` and evaluate each on `eval_items`."""
    match_config = match_config or MatchConfig()
    training_set = build_training_set(train_items, index, corpus, match_config.k)
    comparisons = []
    for config in configs:
        model = train(training_set, config)
        report = evaluate(
            model, eval_items, index, corpus, match_config, params_list, split='eval', deterministic=deterministic
        )
        logger.info('%s model on evaluation split: %s', config.kind.value, report.informedness)
        comparisons.append(ModelComparison(config=config, model=model, report=report))

    return comparisons
