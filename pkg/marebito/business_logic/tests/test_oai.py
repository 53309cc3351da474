from dataclasses import replace

import pytest
from lxml import etree

from marebito.business_logic.corpus import Corpus
from marebito.business_logic.models import BibRecord
from marebito.business_logic.oai import OAI_NAMESPACE, OAIRepository, ResumptionToken
from marebito.business_logic.oai.metadata import DC_NAMESPACE, ZB_PREVIEW_NAMESPACE

from .factories import BibRecordFactory

NAMESPACES = {'oai': OAI_NAMESPACE, 'dc': DC_NAMESPACE, 'zbmath': ZB_PREVIEW_NAMESPACE}


def request(repository, verb, **args):
    return etree.fromstring(repository.handle_oai(verb, args))


def get_error_code(root):
    errors = root.findall('oai:error', NAMESPACES)
    assert len(errors) == 1
    return errors[0].get('code')


def get_identifiers(root):
    return [element.text for element in root.iterfind('.//oai:header/oai:identifier', NAMESPACES)]


@pytest.fixture
def repository(sample_corpus):
    return OAIRepository(sample_corpus, deterministic=True)


@pytest.fixture
def large_records():
    return [BibRecordFactory(id=record_id, msc=['33C05' if record_id % 2 else '11A41']) for record_id in range(1, 251)]


@pytest.fixture
def large_repository(large_records):
    return OAIRepository(Corpus(large_records).freeze(), page_size=100)


def test_identify(repository):
    root = request(repository, 'Identify')

    assert root.findtext('oai:responseDate', namespaces=NAMESPACES) == '1970-01-01T00:00:00Z'
    assert root.find('oai:request', NAMESPACES).get('verb') == 'Identify'
    identify = root.find('oai:Identify', NAMESPACES)
    assert identify.findtext('oai:repositoryName', namespaces=NAMESPACES) == 'zbMATH Open'
    assert identify.findtext('oai:protocolVersion', namespaces=NAMESPACES) == '2.0'
    assert identify.findtext('oai:granularity', namespaces=NAMESPACES) == 'YYYY-MM-DD'


def test_list_metadata_formats(repository):
    root = request(repository, 'ListMetadataFormats')
    prefixes = [element.text for element in root.iterfind('.//oai:metadataPrefix', NAMESPACES)]
    assert prefixes == ['oai_dc', 'oai_zb_preview']

    root = request(repository, 'ListMetadataFormats', identifier='oai:zbmath.org:99')
    assert get_error_code(root) == 'idDoesNotExist'


@pytest.mark.parametrize('verb', (None, '', 'Nope', 'identify'))
def test_bad_verb(repository, verb):
    root = request(repository, verb, metadataPrefix='oai_dc')

    assert get_error_code(root) == 'badVerb'
    assert dict(root.find('oai:request', NAMESPACES).attrib) == {}


@pytest.mark.parametrize(
    'verb, args', (
        ('Identify', {'identifier': 'oai:zbmath.org:1'}),
        ('ListRecords', {}),
        ('ListRecords', {'metadataPrefix': ['oai_dc', 'oai_dc']}),
        ('ListRecords', {'metadataPrefix': 'oai_dc', 'color': 'red'}),
        ('ListRecords', {'metadataPrefix': 'oai_dc', 'resumptionToken': 'abc'}),
        ('GetRecord', {'identifier': 'oai:zbmath.org:1'}),
        ('ListIdentifiers', {'metadataPrefix': 'oai_dc', 'from': 'yesterday'}),
        ('ListIdentifiers', {'metadataPrefix': 'oai_dc', 'from': '2024-02-30'}),
        ('ListIdentifiers', {'metadataPrefix': 'oai_dc', 'from': '2024-02-01', 'until': '2024-01-01'}),
        ('ListIdentifiers', {'metadataPrefix': 'oai_dc', 'set': '33C'}),
    )
)
def test_bad_argument(repository, verb, args):
    assert get_error_code(request(repository, verb, **args)) == 'badArgument'


def test_request_echoes_valid_arguments(repository):
    root = request(repository, 'GetRecord', identifier='oai:zbmath.org:2', metadataPrefix='oai_dc')

    assert dict(root.find('oai:request', NAMESPACES).attrib) == {
        'verb': 'GetRecord',
        'identifier': 'oai:zbmath.org:2',
        'metadataPrefix': 'oai_dc',
    }


def test_get_record_oai_dc(repository):
    root = request(repository, 'GetRecord', identifier='oai:zbmath.org:2', metadataPrefix='oai_dc')

    header = root.find('.//oai:header', NAMESPACES)
    assert header.findtext('oai:identifier', namespaces=NAMESPACES) == 'oai:zbmath.org:2'
    assert header.findtext('oai:datestamp', namespaces=NAMESPACES) == '2024-01-01'
    assert [element.text for element in header.iterfind('oai:setSpec', NAMESPACES)] == ['11', '33']

    metadata = root.find('.//oai:metadata', NAMESPACES)
    assert metadata.findtext('.//dc:title', namespaces=NAMESPACES) == 'On the theory of elliptic integrals'
    assert len(metadata.findall('.//dc:creator', NAMESPACES)) == 2
    assert metadata.findtext('.//dc:date', namespaces=NAMESPACES) == '1999'
    assert metadata.findtext('.//dc:source', namespaces=NAMESPACES) == 'Math. Ann. 12 (1999), 1-20'


@pytest.mark.parametrize('identifier', ('oai:zbmath.org:99', 'oai:zbmath.org:x', 'oai:other.org:1', '1'))
def test_get_record_unknown_identifier(repository, identifier):
    root = request(repository, 'GetRecord', identifier=identifier, metadataPrefix='oai_dc')
    assert get_error_code(root) == 'idDoesNotExist'


def test_get_record_unknown_format(repository):
    root = request(repository, 'GetRecord', identifier='oai:zbmath.org:1', metadataPrefix='marc21')
    assert get_error_code(root) == 'cannotDisseminateFormat'


def test_preview_format_marks_redacted_reviews(repository):
    root = request(repository, 'GetRecord', identifier='oai:zbmath.org:3', metadataPrefix='oai_zb_preview')

    preview = root.find('.//zbmath:zbmath', NAMESPACES)
    assert preview.findtext('zbmath:document_id', namespaces=NAMESPACES) == '3'
    assert preview.findtext('zbmath:doi', namespaces=NAMESPACES) == '10.1016/jat.2005.30'
    assert [element.text for element in preview.iterfind('.//zbmath:classification', NAMESPACES)] == ['33C05']
    review = preview.find('zbmath:review', NAMESPACES)
    assert review.get('redacted') == 'true'
    assert review.text is None

    root = request(repository, 'GetRecord', identifier='oai:zbmath.org:2', metadataPrefix='oai_zb_preview')
    assert root.find('.//zbmath:review', NAMESPACES) is None


def test_list_sets(repository):
    root = request(repository, 'ListSets')

    sets = {
        element.findtext('oai:setSpec', namespaces=NAMESPACES): element.findtext('oai:setName', namespaces=NAMESPACES)
        for element in root.iterfind('.//oai:set', NAMESPACES)
    }
    assert list(sets) == ['11', '33', '65', '83']
    assert sets['33'] == 'Special functions'
    assert sets['83'] == 'Relativity and gravitational theory'


def test_list_sets_without_classifications():
    repository = OAIRepository(Corpus([BibRecord(id=1, title='Untitled notes')]).freeze())
    assert get_error_code(request(repository, 'ListSets')) == 'noSetHierarchy'


def test_list_records_single_page_has_no_token(repository):
    root = request(repository, 'ListRecords', metadataPrefix='oai_dc')

    assert get_identifiers(root) == [f'oai:zbmath.org:{record_id}' for record_id in range(1, 7)]
    assert root.find('.//oai:resumptionToken', NAMESPACES) is None


def test_list_identifiers_pagination(large_repository):
    root = request(large_repository, 'ListIdentifiers', metadataPrefix='oai_dc')
    identifiers = get_identifiers(root)
    page_sizes = [len(identifiers)]
    token = root.find('.//oai:resumptionToken', NAMESPACES)
    assert token.get('completeListSize') == '250'
    assert token.get('cursor') == '0'

    while token is not None and token.text:
        root = request(large_repository, 'ListIdentifiers', resumptionToken=token.text)
        page = get_identifiers(root)
        page_sizes.append(len(page))
        identifiers.extend(page)
        token = root.find('.//oai:resumptionToken', NAMESPACES)

    assert page_sizes == [100, 100, 50]
    assert token is not None
    assert token.get('cursor') == '200'
    assert identifiers == [f'oai:zbmath.org:{record_id}' for record_id in range(1, 251)]


def test_resumption_token_keeps_set_filter(large_repository):
    root = request(large_repository, 'ListIdentifiers', metadataPrefix='oai_dc', set='33')
    token = root.find('.//oai:resumptionToken', NAMESPACES)
    assert token.get('completeListSize') == '125'

    root = request(large_repository, 'ListIdentifiers', resumptionToken=token.text)
    identifiers = get_identifiers(root)
    assert len(identifiers) == 25
    assert all(int(identifier.rsplit(':', 1)[1]) % 2 for identifier in identifiers)


@pytest.mark.parametrize('token', ('garbage!!', 'AAAA', ResumptionToken(-1, 'oai_dc', 100, 'x').encode()))
def test_malformed_resumption_token(large_repository, token):
    root = request(large_repository, 'ListRecords', resumptionToken=token)
    assert get_error_code(root) == 'badResumptionToken'


def test_resumption_token_from_another_generation(large_repository, large_records):
    root = request(large_repository, 'ListIdentifiers', metadataPrefix='oai_dc')
    token = root.findtext('.//oai:resumptionToken', namespaces=NAMESPACES)

    other_repository = OAIRepository(Corpus(large_records[:-1]).freeze(), page_size=100)
    root = request(other_repository, 'ListIdentifiers', resumptionToken=token)
    assert get_error_code(root) == 'badResumptionToken'


def test_resumption_token_past_the_end(large_repository):
    token = ResumptionToken(
        cursor=1000,
        metadata_prefix='oai_dc',
        page_size=100,
        generation=large_repository.corpus.generation,
    )
    root = request(large_repository, 'ListIdentifiers', resumptionToken=token.encode())
    assert get_error_code(root) == 'badResumptionToken'


@pytest.mark.parametrize(
    'changes', (
        {'metadata_prefix': ['oai_dc']},
        {'metadata_prefix': 'marc21'},
        {'from_date': 5},
        {'until_date': ['2024-01-01']},
        {'set_spec': 33},
        {'generation': None},
        {'cursor': True},
        {'cursor': '0'},
        {'page_size': 10**9},
        {'page_size': 0},
    )
)
def test_crafted_resumption_token(large_repository, changes):
    token = ResumptionToken(
        cursor=0,
        metadata_prefix='oai_dc',
        page_size=100,
        generation=large_repository.corpus.generation,
    )
    root = request(large_repository, 'ListRecords', resumptionToken=replace(token, **changes).encode())

    assert get_error_code(root) == 'badResumptionToken'
    assert root.find('oai:ListRecords', NAMESPACES) is None


def test_list_page_size_follows_search_page_size(settings, sample_corpus):
    settings.MAREBITO = {**settings.MAREBITO, 'page_size': 4}
    repository = OAIRepository.from_settings(sample_corpus)

    root = request(repository, 'ListIdentifiers', metadataPrefix='oai_dc')

    assert repository.page_size == 4
    assert len(get_identifiers(root)) == 4
    assert root.find('.//oai:resumptionToken', NAMESPACES).get('completeListSize') == '6'


def test_list_sets_rejects_resumption_token(repository):
    assert get_error_code(request(repository, 'ListSets', resumptionToken='abc')) == 'badResumptionToken'


@pytest.mark.parametrize(
    'args, expected_count', (
        ({'from': '2023-01-01', 'until': '2024-12-31'}, 6),
        ({'from': '2024-01-01', 'until': '2024-01-01'}, 6),
        ({'until': '2024-01-01'}, 6),
        ({'from': '2024-01-02'}, 0),
        ({'until': '2023-12-31'}, 0),
        ({'set': '65'}, 1),
        ({'set': '99'}, 0),
    )
)
def test_list_identifiers_selection(repository, args, expected_count):
    root = request(repository, 'ListIdentifiers', metadataPrefix='oai_dc', **args)

    if expected_count:
        assert len(get_identifiers(root)) == expected_count
    else:
        assert get_error_code(root) == 'noRecordsMatch'
