import json
import logging
from pathlib import Path
from typing import Iterator, Optional, Union

from marebito.core.logging import timeit
from marebito.core.utils.atomic_write import write_lines_atomic
from marebito.core.utils.hashing import hash_normalized_dicts

from .exceptions import CorpusFrozenError, DataIOError, DuplicateIdError, ParseError, ValidationError
from .models import BibRecord
from .msc import has_msc_prefix

GENERATION_LENGTH = 16

logger = logging.getLogger(__name__)


class Corpus:
    """
    Id-indexed store of bibliographic records. Built by a single writer, then frozen and shared
    read-only.
    """

    def __init__(self, records=()):
        self._records: dict[int, BibRecord] = {}
        self._is_frozen = False
        self._generation: Optional[str] = None
        for record in records:
            self.add_record(record)

    def __len__(self):
        return len(self._records)

    def __iter__(self) -> Iterator[BibRecord]:
        return (self._records[record_id] for record_id in self.get_ids())

    def __contains__(self, record_id):
        return record_id in self._records

    @property
    def is_frozen(self):
        return self._is_frozen

    def freeze(self):
        if not self._is_frozen:
            self._generation = self._compute_generation()
            self._is_frozen = True
            logger.debug('Corpus of %s records frozen at generation %s', len(self), self._generation)

        return self

    @property
    def generation(self) -> str:
        """Content stamp: equal corpora give equal stamps across processes."""
        if self._generation is not None:
            return self._generation

        return self._compute_generation()

    def _compute_generation(self) -> str:
        return hash_normalized_dicts(record.serialize_to_dict(skip_none_values=False)
                                     for record in self)[:GENERATION_LENGTH]

    def get_ids(self) -> list[int]:
        return sorted(self._records)

    def get_record(self, record_id: int) -> Optional[BibRecord]:
        return self._records.get(record_id)

    def add_record(self, record: BibRecord) -> int:
        if self._is_frozen:
            raise CorpusFrozenError('Corpus is frozen')

        record.validate()
        if record.id in self._records:
            raise DuplicateIdError(record.id)

        self._records[record.id] = record
        return record.id

    def get_records_by_author_id(self, author_id: str) -> list[BibRecord]:
        return [record for record in self if author_id in record.get_author_ids()]

    def get_records_by_serial(self, serial: str) -> list[BibRecord]:
        return [record for record in self if record.serial == serial]

    def get_records_by_msc_prefix(self, prefix: str) -> list[BibRecord]:
        return [record for record in self if has_msc_prefix(record.msc, prefix)]


def get_record(corpus: Corpus, record_id: int) -> Optional[BibRecord]:
    return corpus.get_record(record_id)


def add_record(corpus: Corpus, record: BibRecord) -> int:
    return corpus.add_record(record)


def parse_record_line(line: str, line_number: int) -> BibRecord:
    try:
        dict_ = json.loads(line)
    except json.JSONDecodeError as ex:
        raise ParseError(f'Malformed JSON: {ex.msg}', line=line_number) from ex

    if not isinstance(dict_, dict):
        raise ParseError('Record must be a JSON object', line=line_number)

    try:
        record = BibRecord.deserialize_from_dict(dict_)
        record.validate()
    except (ValidationError, TypeError) as ex:
        raise ParseError(str(ex), line=line_number) from ex

    return record


@timeit(logger=logger)
def load_corpus(path: Union[str, Path], freeze=True) -> Corpus:
    """Load a JSONL corpus, one record per line. Blank lines are skipped."""
    corpus = Corpus()
    try:
        with open(path, encoding='utf-8') as fo:
            for line_number, line in enumerate(fo, start=1):
                if not line.strip():
                    continue

                corpus.add_record(parse_record_line(line, line_number))
    except OSError as ex:
        raise DataIOError(f'Could not read corpus {path}: {ex}') from ex
    except UnicodeDecodeError as ex:
        raise ParseError(f'Corpus {path} is not valid UTF-8: {ex}') from ex

    logger.info('Loaded %s records from %s', len(corpus), path)
    return corpus.freeze() if freeze else corpus


def serialize_record(record: BibRecord) -> str:
    return json.dumps(record.serialize_to_dict(skip_none_values=False), ensure_ascii=False)


def save_corpus(corpus: Corpus, path: Union[str, Path]):
    write_lines_atomic(path, (serialize_record(record) for record in corpus))
    logger.info('Saved %s records to %s', len(corpus), path)
