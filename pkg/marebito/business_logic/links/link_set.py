import json
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Union

from marebito.core.utils.atomic_write import write_lines_atomic
from marebito.core.utils.collections import sorted_histogram

from ..corpus import Corpus
from ..exceptions import BadMscCodeError, DataIOError, ParseError, ValidationError
from ..models import ScholixLink
from ..msc import TOP_LEVEL_LENGTH, get_top_level_code, has_msc_prefix, is_valid_msc_code

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinkReject:
    line: Optional[int]
    target_id: int
    reason: str


def sort_links(links: Iterable[ScholixLink]) -> list[ScholixLink]:
    return sorted(links, key=ScholixLink.get_sort_key)


class LinkSet:
    """
    Links validated against a corpus, indexed by source provider, target record, target MSC
    top-level class and target author id. Immutable after construction.
    """

    def __init__(self, links: Iterable[ScholixLink] = (), corpus: Optional[Corpus] = None,
                 rejects: Iterable[LinkReject] = ()):
        self.corpus = corpus or Corpus()
        self.links: list[ScholixLink] = sort_links(links)
        self.rejects: list[LinkReject] = list(rejects)

        self._by_provider = defaultdict(list)
        self._by_target = defaultdict(list)
        self._by_msc_top_level = defaultdict(list)
        self._by_author_id = defaultdict(list)
        for link in self.links:
            self._by_provider[link.source.provider].append(link)
            self._by_target[link.target].append(link)

            record = self.corpus.get_record(link.target)
            if record is None:
                continue

            for top_level_code in dict.fromkeys(get_top_level_code(code) for code in record.msc):
                self._by_msc_top_level[top_level_code].append(link)
            for author_id in sorted(record.get_author_ids()):
                self._by_author_id[author_id].append(link)

    def __len__(self):
        return len(self.links)

    def __iter__(self):
        return iter(self.links)

    def get_providers(self) -> list[str]:
        return sorted(self._by_provider)

    def links_by_provider(self, provider: str) -> list[ScholixLink]:
        return list(self._by_provider.get(provider, ()))

    def links_for_target(self, record_id: int) -> list[ScholixLink]:
        """Reverse direction: links shown on the record's own page."""
        return list(self._by_target.get(record_id, ()))

    def links_by_msc(self, code: str) -> list[ScholixLink]:
        if not is_valid_msc_code(code):
            raise BadMscCodeError(code)

        candidates = self._by_msc_top_level.get(code[:TOP_LEVEL_LENGTH], ())
        if len(code) == TOP_LEVEL_LENGTH:
            return list(candidates)

        return [
            link for link in candidates
            if has_msc_prefix(self.corpus.get_record(link.target).msc, code)
        ]

    def links_by_author(self, author_id: str) -> list[ScholixLink]:
        return list(self._by_author_id.get(author_id, ()))


def parse_link_line(line: str, line_number: int) -> ScholixLink:
    try:
        dict_ = json.loads(line)
    except json.JSONDecodeError as ex:
        raise ParseError(f'Malformed JSON: {ex.msg}', line=line_number) from ex

    if not isinstance(dict_, dict):
        raise ParseError('Link must be a JSON object', line=line_number)

    link = ScholixLink.from_flat_dict(dict_, line=line_number)
    try:
        link.validate()
    except ValidationError as ex:
        raise ParseError(str(ex), line=line_number) from ex

    return link


def build_link_set(links: Iterable[ScholixLink], corpus: Corpus, line_numbers=None) -> LinkSet:
    """Keep links whose target is stored in `corpus`; the others become rejects."""
    accepted = []
    rejects = []
    for position, link in enumerate(links):
        if link.target in corpus:
            accepted.append(link)
        else:
            line = line_numbers[position] if line_numbers else None
            rejects.append(LinkReject(line=line, target_id=link.target, reason='Target record does not exist'))

    if rejects:
        logger.warning('Rejected %s links with unknown targets', len(rejects))

    return LinkSet(accepted, corpus=corpus, rejects=rejects)


def load_links(path: Union[str, Path], corpus: Corpus) -> LinkSet:
    links = []
    line_numbers = []
    try:
        with open(path, encoding='utf-8') as fo:
            for line_number, line in enumerate(fo, start=1):
                if line.strip():
                    links.append(parse_link_line(line, line_number))
                    line_numbers.append(line_number)
    except OSError as ex:
        raise DataIOError(f'Could not read links {path}: {ex}') from ex

    link_set = build_link_set(links, corpus, line_numbers)
    logger.info('Loaded %s links (%s rejected) from %s', len(link_set), len(link_set.rejects), path)
    return link_set


def save_links(links: Iterable[ScholixLink], path: Union[str, Path]):
    write_lines_atomic(path, (json.dumps(link.to_flat_dict(), ensure_ascii=False) for link in links))


def links_by_msc(link_set: LinkSet, code: str) -> list[ScholixLink]:
    return link_set.links_by_msc(code)


def links_by_author(link_set: LinkSet, author_id: str) -> list[ScholixLink]:
    return link_set.links_by_author(author_id)


@dataclass
class LinkStats:
    msc_histogram: dict[str, int] = field(default_factory=dict)
    """Primary MSC top-level class of the target to link count, most linked first"""

    year_histogram: dict[int, int] = field(default_factory=dict)
    """Target publication year to link count, by year"""

    def to_dict(self) -> dict:
        return {
            'msc_histogram': self.msc_histogram,
            'year_histogram': {str(year): count for year, count in self.year_histogram.items()},
        }


def link_stats(link_set: LinkSet, corpus: Corpus) -> LinkStats:
    msc_keys = []
    years = []
    for link in link_set:
        record = corpus.get_record(link.target)
        if record is None:
            continue

        primary_msc = record.get_primary_msc()
        if primary_msc:
            msc_keys.append(get_top_level_code(primary_msc))
        if record.year is not None:
            years.append(record.year)

    year_histogram = sorted_histogram(years)
    return LinkStats(
        msc_histogram=sorted_histogram(msc_keys),
        year_histogram={year: year_histogram[year] for year in sorted(year_histogram)},
    )
