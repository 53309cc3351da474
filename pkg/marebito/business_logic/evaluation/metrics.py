from typing import Iterable, Optional

from ..models import ConfusionCounts, GoldItem, MatchResult, PenaltyParams


def classify_outcome(expected_id: Optional[int], matched_id: Optional[int]) -> str:
    if expected_id is not None:
        if matched_id is None:
            return 'fn'

        return 'tp' if matched_id == expected_id else 'fm'

    return 'tn' if matched_id is None else 'fp'


def count_outcomes(pairs: Iterable[tuple[Optional[int], Optional[int]]]) -> ConfusionCounts:
    """Fold (expected id, matched id) pairs into confusion counts."""
    counts = dict.fromkeys(('tp', 'fm', 'fn', 'fp', 'tn'), 0)
    for expected_id, matched_id in pairs:
        counts[classify_outcome(expected_id, matched_id)] += 1

    return ConfusionCounts(**counts)


def confusion_counts(results: Iterable[tuple[GoldItem, MatchResult]]) -> ConfusionCounts:
    return count_outcomes((item.expected_id, result.matched_id) for item, result in results)


def informedness(counts: ConfusionCounts, params: PenaltyParams = PenaltyParams()) -> float:
    """
    TP/RP - (alpha - 1) FM/RP - beta FP/RN. Terms over an empty class (RP = 0 or RN = 0)
    contribute 0.
    """
    rp, rn = counts.rp, counts.rn
    value = 0.0
    if rp:
        value += counts.tp / rp - (params.alpha - 1) * counts.fm / rp
    if rn:
        value -= params.beta * counts.fp / rn

    return value


def informedness_from_errors(counts: ConfusionCounts, params: PenaltyParams = PenaltyParams()) -> float:
    """Same value as `informedness()` written as 1 - FN/RP - alpha FM/RP - beta FP/RN."""
    rp, rn = counts.rp, counts.rn
    value = 0.0
    if rp:
        value += 1 - counts.fn / rp - params.alpha * counts.fm / rp
    if rn:
        value -= params.beta * counts.fp / rn

    return value
