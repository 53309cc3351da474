import pytest

from marebito.business_logic.corpus import Corpus, save_corpus
from marebito.business_logic.index import build_index
from marebito.business_logic.models import AuthorName, BibRecord
from marebito.business_logic.tests.factories import BibRecordFactory


def make_sample_records():
    return [
        BibRecordFactory(),
        BibRecordFactory(
            id=2,
            title='On the theory of elliptic integrals',
            authors=[
                AuthorName(surname='Smith', given='John', author_id='smith.john'),
                AuthorName(surname='Jones', given='Mary', author_id='jones.mary'),
            ],
            year=1999,
            serial='Math. Ann.',
            volume='12',
            pages='1-20',
            doi=None,
            msc=['33E05', '11F03'],
        ),
        BibRecordFactory(
            id=3,
            title='Hypergeometric functions and their applications',
            authors=[AuthorName(surname='Jones', given='M.', author_id='jones.mary')],
            year=2005,
            serial='J. Approx. Theory',
            volume='30',
            pages='100-120',
            doi='10.1016/jat.2005.30',
            msc=['33C05'],
            abstract_redacted=True,
        ),
        BibRecordFactory(
            id=4,
            title='Numerical methods for sparse linear systems',
            authors=[AuthorName(surname='Müller', given='Hans', author_id='muller.hans')],
            year=2010,
            serial='Numer. Math.',
            volume='115',
            pages='1-35',
            doi=None,
            msc=['65F10'],
        ),
        BibRecordFactory(
            id=5,
            title='Prime numbers in arithmetic progressions',
            authors=[AuthorName(surname='Smith', given='John', author_id='smith.john')],
            year=1999,
            serial='Math. Ann.',
            volume='14',
            pages='50-70',
            doi=None,
            msc=['11N13'],
        ),
        BibRecord(id=6, title='Spectral theory of elliptic operators', authors=[AuthorName(surname='Noether')]),
    ]


@pytest.fixture
def sample_records():
    return make_sample_records()


@pytest.fixture
def sample_corpus(sample_records):
    return Corpus(sample_records).freeze()


@pytest.fixture
def sample_index(sample_corpus):
    return build_index(sample_corpus)


@pytest.fixture
def sample_corpus_path(tmp_path, sample_corpus):
    path = tmp_path / 'corpus.jsonl'
    save_corpus(sample_corpus, path)
    return path
