"""
Scholix link exchange documents. Only the link fields carried by `ScholixLink` are written;
the export records the schema version it follows.
"""
import logging
from datetime import date

from ..exceptions import ParseError, ValidationError
from ..models import LinkSource, ScholixLink

SCHOLIX_VERSION = '4.0'
TARGET_ID_SCHEME = 'zbmath'
TARGET_URL_TEMPLATE = 'https://zbmath.org/?q=an:{}'
SOURCE_TYPE = 'other'
TARGET_TYPE = 'literature'

logger = logging.getLogger(__name__)


def link_to_scholix(link: ScholixLink) -> dict:
    return {
        'LinkPublicationDate': link.link_publication_date.isoformat(),
        'LinkProvider': [{'Name': link.link_provider}],
        'RelationshipType': {'Name': link.relationship},
        'Source': {
            'Identifier': [{'ID': link.source.object_id, 'IDScheme': 'url', 'IDURL': link.source.url}],
            'Publisher': [{'Name': link.source.provider}],
            'Type': {'Name': SOURCE_TYPE},
        },
        'Target': {
            'Identifier': [{
                'ID': str(link.target),
                'IDScheme': TARGET_ID_SCHEME,
                'IDURL': TARGET_URL_TEMPLATE.format(link.target),
            }],
            'Type': {'Name': TARGET_TYPE},
        },
    }


def export_scholix(links) -> dict:
    return {
        'scholix_version': SCHOLIX_VERSION,
        'links': [link_to_scholix(link) for link in links],
    }


def scholix_to_link(dict_: dict) -> ScholixLink:
    source = dict_['Source']
    source_identifier = source['Identifier'][0]
    target_id = dict_['Target']['Identifier'][0]['ID']
    try:
        target = int(target_id)
        link_publication_date = date.fromisoformat(dict_['LinkPublicationDate'])
    except ValueError as ex:
        raise ParseError(f'Invalid Scholix link: {ex}') from ex

    link = ScholixLink(
        source=LinkSource(
            provider=source['Publisher'][0]['Name'],
            object_id=source_identifier['ID'],
            url=source_identifier['IDURL'],
        ),
        target=target,
        relationship=dict_['RelationshipType']['Name'],
        link_publication_date=link_publication_date,
        link_provider=dict_['LinkProvider'][0]['Name'],
    )
    try:
        link.validate()
    except ValidationError as ex:
        raise ParseError(f'Invalid Scholix link: {ex}') from ex

    return link


def import_scholix(document: dict) -> list[ScholixLink]:
    if not isinstance(document, dict) or not isinstance(document.get('links'), list):
        raise ParseError('Scholix document must be an object with a "links" list')

    version = document.get('scholix_version')
    if version != SCHOLIX_VERSION:
        logger.warning('Importing Scholix document of version %r, expected %r', version, SCHOLIX_VERSION)

    links = []
    for position, dict_ in enumerate(document['links']):
        try:
            links.append(scholix_to_link(dict_))
        except (KeyError, IndexError, TypeError) as ex:
            raise ParseError(f'Scholix link {position} is missing {ex}') from ex

    return links
