import logging
import re
from datetime import date
from typing import Mapping, Optional, Union

from django.conf import settings
from lxml import etree

from marebito.core.utils.misc import utcnow_iso

from ..constants import DEFAULT_PAGE_SIZE
from ..corpus import Corpus
from ..exceptions import ResumptionTokenError
from ..models import BibRecord
from ..msc import TOP_LEVEL_LENGTH, get_msc_title, get_top_level_code, has_msc_prefix
from .metadata import OAI_DC_NAMESPACE, XSI_NAMESPACE, ZB_PREVIEW_NAMESPACE, build_oai_dc, build_zb_preview
from .tokens import ResumptionToken

OAI_NAMESPACE = 'http://www.openarchives.org/OAI/2.0/'
OAI_SCHEMA_LOCATION = f'{OAI_NAMESPACE} http://www.openarchives.org/OAI/2.0/OAI-PMH.xsd'
PROTOCOL_VERSION = '2.0'
DATE_RE = re.compile(r'\d{4}-\d{2}-\d{2}')

METADATA_FORMATS = {
    'oai_dc': {
        'schema': 'http://www.openarchives.org/OAI/2.0/oai_dc.xsd',
        'namespace': OAI_DC_NAMESPACE,
        'builder': build_oai_dc,
    },
    'oai_zb_preview': {
        'schema': 'https://zbmath.org/OAI/2.0/oai_zb_preview.xsd',
        'namespace': ZB_PREVIEW_NAMESPACE,
        'builder': build_zb_preview,
    },
}

VERB_ARGUMENTS = {
    # verb: (required, optional, exclusive)
    'Identify': ((), (), None),
    'ListMetadataFormats': ((), ('identifier',), None),
    'ListSets': ((), (), 'resumptionToken'),
    'ListIdentifiers': (('metadataPrefix',), ('from', 'until', 'set'), 'resumptionToken'),
    'ListRecords': (('metadataPrefix',), ('from', 'until', 'set'), 'resumptionToken'),
    'GetRecord': (('identifier', 'metadataPrefix'), (), None),
}

DEFAULT_OAI_SETTINGS = {
    'repository_name': 'zbMATH Open',
    'base_url': 'https://oai.zbmath.org/v1/',
    'admin_email': 'info@zbmath.org',
    'earliest_datestamp': '1868-01-01',
    'identifier_prefix': 'oai:zbmath.org:',
    'datestamp': '2024-01-01',
}

logger = logging.getLogger(__name__)

ArgumentValue = Union[str, list[str], tuple[str, ...]]


class OAIProtocolError(Exception):
    """Rendered in-band as an `<error>` element, never raised out of `handle_oai()`."""

    def __init__(self, code, message, echo_arguments=True):
        super().__init__(message)
        self.code = code
        self.message = message
        self.echo_arguments = echo_arguments


def qualify(tag: str) -> str:
    return f'{{{OAI_NAMESPACE}}}{tag}'


def add_element(parent, tag: str, text=None, **attributes):
    element = etree.SubElement(parent, qualify(tag), **{key: str(value) for key, value in attributes.items()})
    if text is not None:
        element.text = str(text)

    return element


def parse_date_argument(name: str, value: str) -> date:
    if not DATE_RE.fullmatch(value):
        raise OAIProtocolError('badArgument', f'Argument {name} must be a YYYY-MM-DD date')

    try:
        return date.fromisoformat(value)
    except ValueError as ex:
        raise OAIProtocolError('badArgument', f'Argument {name} is not a valid date') from ex


def flatten_arguments(args: Mapping[str, ArgumentValue]) -> dict[str, str]:
    flat = {}
    for name, value in args.items():
        if isinstance(value, (list, tuple)):
            if len(value) != 1:
                raise OAIProtocolError('badArgument', f'Argument {name} is repeated', echo_arguments=False)
            value = value[0]

        flat[name] = value

    return flat


class OAIRepository:
    """OAI-PMH 2.0 request handler over a frozen corpus. Every request is answered with an XML document."""

    def __init__(
        self,
        corpus: Corpus,
        oai_settings: Optional[dict] = None,
        deterministic=False,
        page_size: int = DEFAULT_PAGE_SIZE,
    ):
        self.corpus = corpus
        self.settings = DEFAULT_OAI_SETTINGS | (oai_settings or {})
        self.deterministic = deterministic
        self._page_size = page_size

    @classmethod
    def from_settings(cls, corpus: Corpus, deterministic=False) -> 'OAIRepository':
        # List pages share the page size of the search API
        page_size = getattr(settings, 'MAREBITO', {}).get('page_size', DEFAULT_PAGE_SIZE)
        return cls(corpus, getattr(settings, 'OAI_PMH', None), deterministic=deterministic, page_size=page_size)

    @property
    def identifier_prefix(self) -> str:
        return self.settings['identifier_prefix']

    @property
    def page_size(self) -> int:
        return self._page_size

    @property
    def datestamp(self) -> str:
        return self.settings['datestamp']

    def get_identifier(self, record: BibRecord) -> str:
        return f'{self.identifier_prefix}{record.id}'

    def get_record_by_identifier(self, identifier: str) -> BibRecord:
        record = None
        if identifier.startswith(self.identifier_prefix):
            local_id = identifier[len(self.identifier_prefix):]
            if local_id.isdigit():
                record = self.corpus.get_record(int(local_id))

        if record is None:
            raise OAIProtocolError('idDoesNotExist', f'No record with identifier {identifier}')

        return record

    def handle_oai(self, verb: Optional[str], args: Mapping[str, ArgumentValue]) -> bytes:
        root = etree.Element(qualify('OAI-PMH'), nsmap={None: OAI_NAMESPACE, 'xsi': XSI_NAMESPACE})
        root.set(f'{{{XSI_NAMESPACE}}}schemaLocation', OAI_SCHEMA_LOCATION)
        add_element(root, 'responseDate', utcnow_iso(self.deterministic))
        request_element = add_element(root, 'request', self.settings['base_url'])

        try:
            arguments = self.validate_arguments(verb, args)
            request_element.set('verb', verb)
            for name, value in arguments.items():
                request_element.set(name, value)

            getattr(self, f'handle_{verb}')(root, arguments)
        except OAIProtocolError as ex:
            logger.debug('OAI-PMH error %s: %s', ex.code, ex.message)
            if not ex.echo_arguments:
                for name in list(request_element.attrib):
                    del request_element.attrib[name]
            add_element(root, 'error', ex.message, code=ex.code)

        return etree.tostring(root, xml_declaration=True, encoding='UTF-8', pretty_print=True)

    def validate_arguments(self, verb: Optional[str], args: Mapping[str, ArgumentValue]) -> dict[str, str]:
        if verb not in VERB_ARGUMENTS:
            raise OAIProtocolError('badVerb', f'Illegal OAI verb: {verb}', echo_arguments=False)

        arguments = flatten_arguments(args)
        arguments.pop('verb', None)
        required, optional, exclusive = VERB_ARGUMENTS[verb]
        allowed = set(required) | set(optional) | ({exclusive} if exclusive else set())
        unknown = sorted(set(arguments) - allowed)
        if unknown:
            raise OAIProtocolError('badArgument', f'Illegal arguments: {", ".join(unknown)}', echo_arguments=False)

        if exclusive and exclusive in arguments:
            if len(arguments) > 1:
                raise OAIProtocolError(
                    'badArgument', f'Argument {exclusive} is exclusive', echo_arguments=False
                )
            return arguments

        missing = [name for name in required if not arguments.get(name)]
        if missing:
            raise OAIProtocolError(
                'badArgument', f'Missing required arguments: {", ".join(missing)}', echo_arguments=False
            )

        return arguments

    def handle_Identify(self, root, arguments):  # noqa: N802
        identify = add_element(root, 'Identify')
        add_element(identify, 'repositoryName', self.settings['repository_name'])
        add_element(identify, 'baseURL', self.settings['base_url'])
        add_element(identify, 'protocolVersion', PROTOCOL_VERSION)
        add_element(identify, 'adminEmail', self.settings['admin_email'])
        add_element(identify, 'earliestDatestamp', self.settings['earliest_datestamp'])
        add_element(identify, 'deletedRecord', 'no')
        add_element(identify, 'granularity', 'YYYY-MM-DD')

    def handle_ListMetadataFormats(self, root, arguments):  # noqa: N802
        identifier = arguments.get('identifier')
        if identifier:
            self.get_record_by_identifier(identifier)

        formats = add_element(root, 'ListMetadataFormats')
        for prefix, format_ in METADATA_FORMATS.items():
            metadata_format = add_element(formats, 'metadataFormat')
            add_element(metadata_format, 'metadataPrefix', prefix)
            add_element(metadata_format, 'schema', format_['schema'])
            add_element(metadata_format, 'metadataNamespace', format_['namespace'])

    def get_set_specs(self) -> list[str]:
        return sorted({get_top_level_code(code) for record in self.corpus for code in record.msc})

    def handle_ListSets(self, root, arguments):  # noqa: N802
        if 'resumptionToken' in arguments:
            raise OAIProtocolError('badResumptionToken', 'Set lists are not paginated')

        set_specs = self.get_set_specs()
        if not set_specs:
            raise OAIProtocolError('noSetHierarchy', 'This repository does not support sets')

        sets = add_element(root, 'ListSets')
        for set_spec in set_specs:
            set_element = add_element(sets, 'set')
            add_element(set_element, 'setSpec', set_spec)
            add_element(set_element, 'setName', get_msc_title(set_spec) or set_spec)

    def handle_GetRecord(self, root, arguments):  # noqa: N802
        metadata_prefix = self.validate_metadata_prefix(arguments['metadataPrefix'])
        record = self.get_record_by_identifier(arguments['identifier'])
        get_record = add_element(root, 'GetRecord')
        self.add_record(get_record, record, metadata_prefix)

    def handle_ListIdentifiers(self, root, arguments):  # noqa: N802
        self.handle_list(root, arguments, 'ListIdentifiers', with_metadata=False)

    def handle_ListRecords(self, root, arguments):  # noqa: N802
        self.handle_list(root, arguments, 'ListRecords', with_metadata=True)

    def validate_metadata_prefix(self, metadata_prefix: str) -> str:
        if metadata_prefix not in METADATA_FORMATS:
            raise OAIProtocolError(
                'cannotDisseminateFormat', f'Metadata format {metadata_prefix} is not supported'
            )

        return metadata_prefix

    def get_request_token(self, arguments) -> ResumptionToken:
        encoded_token = arguments.get('resumptionToken')
        if encoded_token is None:
            from_date = arguments.get('from')
            until_date = arguments.get('until')
            if from_date:
                parse_date_argument('from', from_date)
            if until_date:
                parse_date_argument('until', until_date)
            if from_date and until_date and from_date > until_date:
                raise OAIProtocolError('badArgument', 'Argument from must not be later than until')

            set_spec = arguments.get('set')
            if set_spec is not None and len(set_spec) != TOP_LEVEL_LENGTH:
                raise OAIProtocolError('badArgument', f'Set {set_spec} is not a top-level MSC class')

            return ResumptionToken(
                cursor=0,
                metadata_prefix=self.validate_metadata_prefix(arguments['metadataPrefix']),
                page_size=self.page_size,
                generation=self.corpus.generation,
                set_spec=set_spec,
                from_date=from_date,
                until_date=until_date,
            )

        try:
            token = ResumptionToken.decode(encoded_token)
        except ResumptionTokenError as ex:
            raise OAIProtocolError('badResumptionToken', str(ex)) from ex

        if token.generation != self.corpus.generation:
            raise OAIProtocolError('badResumptionToken', 'Resumption token was issued for another corpus generation')
        if token.metadata_prefix not in METADATA_FORMATS:
            raise OAIProtocolError('badResumptionToken', 'Resumption token names an unknown metadata format')
        if token.page_size != self.page_size:
            raise OAIProtocolError('badResumptionToken', 'Resumption token page size does not match the repository')

        return token

    def get_matching_records(self, token: ResumptionToken) -> list[BibRecord]:
        # Records carry no datestamp of their own, so a date range selects all or nothing
        if token.from_date and self.datestamp < token.from_date:
            return []
        if token.until_date and self.datestamp > token.until_date:
            return []

        if token.set_spec is None:
            return list(self.corpus)

        return [record for record in self.corpus if has_msc_prefix(record.msc, token.set_spec)]

    def handle_list(self, root, arguments, verb: str, with_metadata: bool):
        token = self.get_request_token(arguments)
        records = self.get_matching_records(token)
        complete_list_size = len(records)
        if not records:
            raise OAIProtocolError('noRecordsMatch', 'No records match the request')
        if token.cursor >= complete_list_size:
            raise OAIProtocolError('badResumptionToken', 'Resumption token is past the end of the list')

        page = records[token.cursor:token.cursor + token.page_size]
        list_element = add_element(root, verb)
        for record in page:
            if with_metadata:
                self.add_record(list_element, record, token.metadata_prefix)
            else:
                self.add_header(list_element, record)

        next_token = token.get_next()
        if next_token.cursor < complete_list_size:
            add_element(
                list_element,
                'resumptionToken',
                next_token.encode(),
                completeListSize=complete_list_size,
                cursor=token.cursor,
            )
        elif token.cursor > 0:
            add_element(list_element, 'resumptionToken', completeListSize=complete_list_size, cursor=token.cursor)

        logger.debug('%s page at cursor %s: %s of %s records', verb, token.cursor, len(page), complete_list_size)

    def add_header(self, parent, record: BibRecord):
        header = add_element(parent, 'header')
        add_element(header, 'identifier', self.get_identifier(record))
        add_element(header, 'datestamp', self.datestamp)
        for set_spec in sorted({get_top_level_code(code) for code in record.msc}):
            add_element(header, 'setSpec', set_spec)

        return header

    def add_record(self, parent, record: BibRecord, metadata_prefix: str):
        record_element = add_element(parent, 'record')
        self.add_header(record_element, record)
        metadata = add_element(record_element, 'metadata')
        metadata.append(METADATA_FORMATS[metadata_prefix]['builder'](record))
        return record_element


def handle_oai(repository: OAIRepository, verb: Optional[str], args: Mapping[str, ArgumentValue]) -> bytes:
    return repository.handle_oai(verb, args)
