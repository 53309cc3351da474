from .gold import DEFAULT_RATIOS, load_gold, partition_gold, save_gold, select_split  # noqa: F401
from .metrics import confusion_counts, count_outcomes, informedness, informedness_from_errors  # noqa: F401
from .report import (  # noqa: F401
    EvaluationReport, ModelComparison, PenalizedInformedness, compare_models, evaluate, make_report
)
from .sweep import (  # noqa: F401
    CSV_COLUMNS, DEFAULT_PENALTIES, CachedDecision, SweepCurve, SweepPoint, parse_penalties, parse_thresholds,
    render_sweep_csv, score_gold, sweep_decisions, threshold_sweep, write_sweep_csv
)
