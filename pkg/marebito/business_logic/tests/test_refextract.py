import pytest
from django.test import override_settings

from marebito.business_logic.exceptions import EmptyInputError, InvalidFieldError, UnparseableError
from marebito.business_logic.models import AuthorName, ExtractedReference
from marebito.business_logic.refextract import (
    ReferenceExtractor, RuleCascadeExtractor, extract_fields, extract_structured, get_extractor
)
from marebito.business_logic.refextract.authors import parse_author_names

EINSTEIN_CITATION = 'A. Einstein, Zur Elektrodynamik bewegter Körper, Ann. Phys. 17 (1905), 891-921.'


class FixedExtractor(ReferenceExtractor):

    def extract(self, citation):
        return ExtractedReference(raw=citation, title='fixed')


def test_extract_full_citation():
    reference = extract_fields(EINSTEIN_CITATION)

    assert reference.raw == EINSTEIN_CITATION
    assert reference.authors == [AuthorName(surname='Einstein', given='A.')]
    assert reference.title == 'Zur Elektrodynamik bewegter Körper'
    assert reference.container == 'Ann. Phys.'
    assert reference.volume == '17'
    assert reference.year == 1905
    assert reference.pages == '891-921'
    assert reference.doi is None


def test_extract_inverted_author_names():
    reference = extract_fields(
        'Smith, John, Jones, Mary, On the theory of elliptic integrals, Math. Ann. 12 (1999), 1-20.'
    )

    assert reference.authors == [
        AuthorName(surname='Smith', given='John'),
        AuthorName(surname='Jones', given='Mary'),
    ]
    assert reference.title == 'On the theory of elliptic integrals'
    assert reference.container == 'Math. Ann.'
    assert reference.year == 1999


def test_extract_authors_joined_with_and():
    reference = extract_fields('J. Smith and M. Jones, Prime numbers in arithmetic progressions, Math. Ann. 14 (1999)')

    assert reference.get_surnames() == ['Smith', 'Jones']
    assert reference.title == 'Prime numbers in arithmetic progressions'
    assert reference.pages is None


def test_extract_doi_only():
    reference = extract_fields('See doi:10.1000/xyz123 for details')

    assert reference.doi == '10.1000/xyz123'
    assert reference.authors == []
    assert reference.title is None


def test_doi_trailing_punctuation_is_stripped():
    reference = extract_fields('A. Einstein, Some title, https://doi.org/10.1002/andp.19053221004.')

    assert reference.doi == '10.1002/andp.19053221004'


def test_year_outside_range_is_ignored():
    reference = extract_fields('A. Einstein, Zur Elektrodynamik bewegter Körper (1234)')

    assert reference.year is None


@pytest.mark.parametrize('citation', ('', '   ', '\n'))
def test_empty_citation_raises_empty_input_error(citation):
    with pytest.raises(EmptyInputError):
        extract_fields(citation)


def test_citation_without_identifying_fields_is_unparseable():
    with pytest.raises(UnparseableError):
        extract_fields('12345')


def test_extracted_fields_occur_in_input():
    reference = extract_fields(EINSTEIN_CITATION)

    for value in (reference.title, reference.container, reference.volume, reference.pages):
        assert value in EINSTEIN_CITATION
    for author in reference.authors:
        assert author.surname in EINSTEIN_CITATION


def test_extractor_is_configurable():
    assert isinstance(get_extractor(), RuleCascadeExtractor)

    ReferenceExtractor.clear_instance_cache()
    extractor_setting = {'class': 'marebito.business_logic.tests.test_refextract.FixedExtractor'}
    with override_settings(REFERENCE_EXTRACTOR=extractor_setting):
        assert extract_fields('anything').title == 'fixed'


def test_extract_structured_coerces_year():
    reference = extract_structured({'title': 'X', 'year': '1999'})

    assert reference.title == 'X'
    assert reference.year == 1999


@pytest.mark.parametrize(
    'fields, field', (
        ({'year': '99999'}, 'year'),
        ({'year': 'nineteen'}, 'year'),
        ({'year': True}, 'year'),
        ({'title': ['X']}, 'title'),
        ({'journal': 'Ann. Phys.'}, 'journal'),
        ({'authors': 42}, 'authors'),
    )
)
def test_extract_structured_rejects_invalid_field(fields, field):
    with pytest.raises(InvalidFieldError) as exc_info:
        extract_structured(fields)

    assert exc_info.value.field == field


def test_extract_structured_parses_author_strings():
    assert extract_structured({'authors': 'Knuth, D.'}).authors == [AuthorName(surname='Knuth', given='D.')]
    assert extract_structured({'authors': ['A. Einstein', {'surname': 'Noether', 'given': 'E.'}]}).authors == [
        AuthorName(surname='Einstein', given='A.'),
        AuthorName(surname='Noether', given='E.'),
    ]


def test_extract_structured_raw_is_canonical_json():
    assert extract_structured({'year': 1999, 'title': 'X'}).raw == '{"title":"X","year":1999}'


def test_parse_author_names_falls_back_to_free_names():
    assert parse_author_names('Donald Ervin Knuth') == [AuthorName(surname='Knuth', given='Donald Ervin')]
    assert parse_author_names('J.-P. Serre; van der Waerden, B. L.') == [
        AuthorName(surname='Serre', given='J.-P.'),
        AuthorName(surname='van der Waerden', given='B. L.'),
    ]
