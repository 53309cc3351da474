import pytest

from marebito.business_logic.entities import (
    AuthorSummary, ClassificationSummary, SerialSummary, get_author_summary, get_classification_summary,
    get_serial_summary
)


def test_author_summary(sample_corpus):
    assert get_author_summary(sample_corpus, 'jones.mary') == AuthorSummary(
        author_id='jones.mary',
        name_forms=['Jones, Mary', 'Jones, M.'],
        document_ids=[2, 3],
    )
    assert get_author_summary(sample_corpus, 'smith.john').name_forms == ['Smith, John']
    assert get_author_summary(sample_corpus, 'nobody') is None


@pytest.mark.parametrize(
    'code, expected', (
        ('33', ClassificationSummary(code='33', description='Special functions', count=2)),
        ('33C', ClassificationSummary(code='33C', description='Special functions', count=1)),
        ('33C05', ClassificationSummary(code='33C05', description='Special functions', count=1)),
        ('65', ClassificationSummary(code='65', description='Numerical analysis', count=1)),
        ('94', ClassificationSummary(code='94', description='Information and communication theory, circuits')),
    )
)
def test_classification_summary(sample_corpus, code, expected):
    assert get_classification_summary(sample_corpus, code) == expected


@pytest.mark.parametrize('code', ('02', '99', '3', '33c', 'special'))
def test_unknown_classification(sample_corpus, code):
    assert get_classification_summary(sample_corpus, code) is None


def test_serial_summary(sample_corpus):
    assert get_serial_summary(sample_corpus, 'Math. Ann.') == SerialSummary(
        serial='Math. Ann.', count=2, document_ids=[2, 5]
    )
    assert get_serial_summary(sample_corpus, 'math. ann.') is None
