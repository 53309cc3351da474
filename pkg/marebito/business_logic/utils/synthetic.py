"""
Synthetic corpora and gold sets for benchmarking the matcher. Positive gold items are noisy
renderings of real corpus records; negative gold items cite fabricated records absent from the
corpus. Output depends on the seed only.
"""
import logging
import random
from dataclasses import dataclass, field
from datetime import date, timedelta
from pathlib import Path
from typing import Optional, Union

from tqdm import tqdm
from unidecode import unidecode

from marebito.business_logic.constants import DEFAULT_SEED
from marebito.business_logic.corpus import Corpus, save_corpus
from marebito.business_logic.evaluation.gold import save_gold
from marebito.business_logic.exceptions import BadConfigError, ValidationError
from marebito.business_logic.links import save_links
from marebito.business_logic.models import AuthorName, BibRecord, GoldItem, LinkSource, ScholixLink
from marebito.business_logic.models.base import BaseDataclass
from marebito.business_logic.validators import validate_gte_value, validate_probability, validate_type
from marebito.core.logging import validates

from .vocabulary import (
    GIVEN_NAMES, LINK_MSC_WEIGHTS, MSC_SUBCLASS_LETTERS, MSC_TOP_LEVEL_WEIGHTS, SERIALS, SURNAMES, TITLE_WORDS
)

MIN_TITLE_WORDS = 4
MAX_TITLE_WORDS = 8
MIN_KEPT_TITLE_WORDS = 2
MAX_AUTHORS = 3
MIN_RECORD_YEAR = 1950
MAX_RECORD_YEAR = 2023
REDACTED_PROBABILITY = 0.1
DOI_PROBABILITY = 0.6
LINK_PROVIDER = 'zbMATH Open'
LINK_SOURCE_PROVIDER = 'DLMF'
FIRST_LINK_DATE = date(2021, 1, 1)

logger = logging.getLogger(__name__)


@dataclass
class SynthConfig(BaseDataclass):
    records: int = 1000
    gold: int = 200
    negative_fraction: float = 0.2
    token_drop_p: float = 0.1
    """Probability of dropping each title word"""

    author_initial_p: float = 0.5
    """Probability of abbreviating an author's given name to an initial"""

    year_jitter_p: float = 0.05
    """Probability of an off-by-one year"""

    seed: int = DEFAULT_SEED
    links: int = 0

    @property
    def negative_count(self) -> int:
        return int(self.gold * self.negative_fraction + 0.5)

    @property
    def positive_count(self) -> int:
        return self.gold - self.negative_count

    def validate(self):
        try:
            self._validate()
        except ValidationError as ex:
            raise BadConfigError(f'Invalid synthetic data configuration: {ex}') from ex

    @validates('synthetic data config')
    def _validate(self):
        validate_type('Record count', self.records, int)
        validate_gte_value('Record count', self.records, 1)
        validate_type('Gold item count', self.gold, int)
        validate_gte_value('Gold item count', self.gold, 0)
        validate_probability('Negative fraction', self.negative_fraction)
        validate_probability('Token drop probability', self.token_drop_p)
        validate_probability('Author initial probability', self.author_initial_p)
        validate_probability('Year jitter probability', self.year_jitter_p)
        validate_type('Seed', self.seed, int)
        validate_type('Link count', self.links, int)
        validate_gte_value('Link count', self.links, 0)
        if self.positive_count > self.records:
            raise ValidationError(
                f'{self.positive_count} positive gold items need at least as many records, got {self.records}'
            )


@dataclass
class SyntheticDataset:
    corpus: Corpus
    gold: list[GoldItem]
    links: list[ScholixLink] = field(default_factory=list)


def weighted_choice(rng: random.Random, weights: dict[str, int]) -> str:
    return rng.choices(tuple(weights), weights=tuple(weights.values()))[0]


def make_author_id(surname: str, given: str) -> str:
    return unidecode(f'{surname}.{given}').lower()


def make_msc_code(rng: random.Random, top_level: str) -> str:
    return f'{top_level}{rng.choice(MSC_SUBCLASS_LETTERS)}{rng.randint(5, 99):02d}'


class RecordFactory:

    def __init__(self, rng: random.Random):
        self.rng = rng
        self.used_titles: set[str] = set()

    def make_title(self) -> str:
        while True:
            words = self.rng.sample(TITLE_WORDS, self.rng.randint(MIN_TITLE_WORDS, MAX_TITLE_WORDS))
            title = ' '.join(words).capitalize()
            if title not in self.used_titles:
                self.used_titles.add(title)
                return title

    def make_authors(self) -> list[AuthorName]:
        surnames = self.rng.sample(SURNAMES, self.rng.randint(1, MAX_AUTHORS))
        authors = []
        for surname in surnames:
            given = self.rng.choice(GIVEN_NAMES)
            authors.append(AuthorName(surname=surname, given=given, author_id=make_author_id(surname, given)))

        return authors

    def make_msc(self) -> list[str]:
        top_levels = [weighted_choice(self.rng, MSC_TOP_LEVEL_WEIGHTS) for _ in range(self.rng.randint(1, 3))]
        return list(dict.fromkeys(make_msc_code(self.rng, top_level) for top_level in top_levels))

    def make_record(self, record_id: int) -> BibRecord:
        first_page = self.rng.randint(1, 400)
        return BibRecord(
            id=record_id,
            title=self.make_title(),
            authors=self.make_authors(),
            year=self.rng.randint(MIN_RECORD_YEAR, MAX_RECORD_YEAR),
            serial=self.rng.choice(SERIALS),
            volume=str(self.rng.randint(1, 150)),
            pages=f'{first_page}-{first_page + self.rng.randint(5, 40)}',
            doi=f'10.5555/zb.{record_id}' if self.rng.random() < DOI_PROBABILITY else None,
            msc=self.make_msc(),
            abstract_redacted=self.rng.random() < REDACTED_PROBABILITY,
        )


class CitationRenderer:
    """Render "<authors>, <title>, <serial> <vol> (<year>), <pages>." with configured noise."""

    def __init__(self, config: SynthConfig, rng: random.Random):
        self.config = config
        self.rng = rng

    def render_author(self, author: AuthorName) -> str:
        if author.given and self.rng.random() < self.config.author_initial_p:
            return f'{author.given[0]}. {author.surname}'

        return author.format_name()

    def render_title(self, title: str) -> str:
        words = title.split()
        kept = [word for word in words if self.rng.random() >= self.config.token_drop_p]
        if len(kept) < MIN_KEPT_TITLE_WORDS:
            kept = words[:MIN_KEPT_TITLE_WORDS]

        return ' '.join(kept).capitalize()

    def render_year(self, year: int) -> int:
        if self.rng.random() < self.config.year_jitter_p:
            return year + self.rng.choice((-1, 1))

        return year

    def render(self, record: BibRecord) -> str:
        authors = ', '.join(self.render_author(author) for author in record.authors)
        title = self.render_title(record.title)
        year = self.render_year(record.year)
        return f'{authors}, {title}, {record.serial} {record.volume} ({year}), {record.pages}.'


def generate_corpus(config: SynthConfig, rng: random.Random, factory: RecordFactory) -> Corpus:
    corpus = Corpus()
    for record_id in tqdm(range(1, config.records + 1), desc='Records', disable=None):
        corpus.add_record(factory.make_record(record_id))

    return corpus.freeze()


def generate_gold(config: SynthConfig, corpus: Corpus, rng: random.Random, factory: RecordFactory) -> list[GoldItem]:
    renderer = CitationRenderer(config, rng)
    positive_ids = sorted(rng.sample(corpus.get_ids(), config.positive_count))
    items = [GoldItem(input=renderer.render(corpus.get_record(record_id)), expected_id=record_id)
             for record_id in positive_ids]

    next_absent_id = config.records + 1
    for offset in range(config.negative_count):
        fabricated = factory.make_record(next_absent_id + offset)
        items.append(GoldItem(input=renderer.render(fabricated)))

    rng.shuffle(items)
    return items


def generate_links(config: SynthConfig, corpus: Corpus, rng: random.Random) -> list[ScholixLink]:
    records_by_top_level = {}
    for record in corpus:
        for top_level in {code[:2] for code in record.msc}:
            records_by_top_level.setdefault(top_level, []).append(record.id)

    all_ids = corpus.get_ids()
    links = []
    for number in tqdm(range(1, config.links + 1), desc='Links', disable=None):
        target_ids = records_by_top_level.get(weighted_choice(rng, LINK_MSC_WEIGHTS)) or all_ids
        object_id = f'bib{number}'
        links.append(
            ScholixLink(
                source=LinkSource(
                    provider=LINK_SOURCE_PROVIDER,
                    object_id=object_id,
                    url=f'https://dlmf.nist.gov/bib/#{object_id}',
                ),
                target=rng.choice(target_ids),
                link_publication_date=FIRST_LINK_DATE + timedelta(days=rng.randint(0, 3 * 365)),
                link_provider=LINK_PROVIDER,
            )
        )

    return links


def generate_synthetic(config: SynthConfig) -> SyntheticDataset:
    config.validate()
    rng = random.Random(config.seed)
    factory = RecordFactory(rng)
    corpus = generate_corpus(config, rng, factory)
    gold = generate_gold(config, corpus, rng, factory)
    links = generate_links(config, corpus, rng) if config.links else []
    logger.info(
        'Generated %s records, %s gold items (%s negative) and %s links', len(corpus), len(gold),
        config.negative_count, len(links)
    )
    return SyntheticDataset(corpus=corpus, gold=gold, links=links)


def write_synthetic(
    dataset: SyntheticDataset,
    corpus_path: Union[str, Path],
    gold_path: Union[str, Path],
    links_path: Optional[Union[str, Path]] = None,
):
    save_corpus(dataset.corpus, corpus_path)
    save_gold(dataset.gold, gold_path)
    if links_path:
        save_links(dataset.links, links_path)
