import json
import logging
import math
import random
from pathlib import Path
from typing import Optional, Sequence, Union

from marebito.core.utils.atomic_write import write_lines_atomic

from ..corpus import Corpus
from ..enums import GoldSplit
from ..exceptions import BadRatiosError, DataIOError, ParseError, ValidationError
from ..models import GoldItem
from ..validators import validate_type

RATIO_SUM_TOLERANCE = 1e-9
DEFAULT_RATIOS = (0.6, 0.2, 0.2)

logger = logging.getLogger(__name__)


def parse_gold_line(line: str, line_number: int, corpus: Optional[Corpus] = None) -> GoldItem:
    try:
        dict_ = json.loads(line)
    except json.JSONDecodeError as ex:
        raise ParseError(f'Malformed JSON: {ex.msg}', line=line_number) from ex

    if not isinstance(dict_, dict):
        raise ParseError('Gold item must be a JSON object', line=line_number)

    try:
        item = GoldItem.deserialize_from_dict(dict_)
    except ValidationError as ex:
        raise ParseError(str(ex), line=line_number) from ex

    if corpus is not None and item.expected_id is not None and item.expected_id not in corpus:
        raise ParseError(f'Expected record {item.expected_id} is not in the corpus', line=line_number)

    return item


def load_gold(path: Union[str, Path], corpus: Optional[Corpus] = None) -> list[GoldItem]:
    """Load JSONL `{input, expected_id}` items; with `corpus` every expected id must be stored in it."""
    items = []
    try:
        with open(path, encoding='utf-8') as fo:
            for line_number, line in enumerate(fo, start=1):
                if line.strip():
                    items.append(parse_gold_line(line, line_number, corpus))
    except OSError as ex:
        raise DataIOError(f'Could not read gold set {path}: {ex}') from ex

    logger.info('Loaded %s gold items from %s', len(items), path)
    return items


def save_gold(items: Sequence[GoldItem], path: Union[str, Path]):
    write_lines_atomic(path, (json.dumps(item.serialize_to_dict(), ensure_ascii=False) for item in items))


def validate_ratios(ratios):
    if len(ratios) != 3:
        raise BadRatiosError('Exactly three ratios (train, eval, test) are required')

    for ratio in ratios:
        try:
            validate_type('Ratio', ratio, (int, float))
        except ValidationError as ex:
            raise BadRatiosError(str(ex)) from ex

        if ratio <= 0:
            raise BadRatiosError(f'Ratios must be positive, got {ratio}')

    if abs(sum(ratios) - 1) > RATIO_SUM_TOLERANCE:
        raise BadRatiosError(f'Ratios must sum to 1, got {sum(ratios)}')


def partition_gold(gold: Sequence[GoldItem], seed: int,
                   ratios=DEFAULT_RATIOS) -> tuple[list[GoldItem], list[GoldItem], list[GoldItem]]:
    """Shuffle deterministically by `seed` and cut into train, eval and test lists."""
    validate_ratios(ratios)

    shuffled = list(gold)
    random.Random(seed).shuffle(shuffled)

    item_count = len(shuffled)
    train_size = min(math.floor(ratios[0] * item_count + 0.5), item_count)
    eval_size = min(math.floor(ratios[1] * item_count + 0.5), item_count - train_size)
    eval_end = train_size + eval_size
    return shuffled[:train_size], shuffled[train_size:eval_end], shuffled[eval_end:]


def select_split(gold: Sequence[GoldItem], split: GoldSplit, seed: int, ratios=DEFAULT_RATIOS) -> list[GoldItem]:
    if split == GoldSplit.ALL:
        return list(gold)

    train_items, eval_items, test_items = partition_gold(gold, seed, ratios)
    return {GoldSplit.TRAIN: train_items, GoldSplit.EVAL: eval_items, GoldSplit.TEST: test_items}[split]
