from lxml import etree

from ..models import BibRecord

XSI_NAMESPACE = 'http://www.w3.org/2001/XMLSchema-instance'
OAI_DC_NAMESPACE = 'http://www.openarchives.org/OAI/2.0/oai_dc/'
DC_NAMESPACE = 'http://purl.org/dc/elements/1.1/'
ZB_PREVIEW_NAMESPACE = 'https://zbmath.org/OAI/2.0/oai_zb_preview/'

DOCUMENT_URL_TEMPLATE = 'https://zbmath.org/?q=an:{}'


def qualify(namespace: str, tag: str) -> str:
    return f'{{{namespace}}}{tag}'


def add_text_element(parent, namespace: str, tag: str, text, **attributes):
    if text is None or text == '':
        return None

    element = etree.SubElement(parent, qualify(namespace, tag), **attributes)
    element.text = str(text)
    return element


def format_source(record: BibRecord) -> str:
    """Render "<serial> <volume> (<year>), <pages>" from whatever parts the record has."""
    source = ' '.join(part for part in (record.serial, record.volume) if part)
    if record.year is not None:
        source = f'{source} ({record.year})'.strip()
    if record.pages:
        source = f'{source}, {record.pages}' if source else record.pages

    return source


def build_oai_dc(record: BibRecord):
    root = etree.Element(
        qualify(OAI_DC_NAMESPACE, 'dc'),
        nsmap={'oai_dc': OAI_DC_NAMESPACE, 'dc': DC_NAMESPACE, 'xsi': XSI_NAMESPACE},
    )
    root.set(
        qualify(XSI_NAMESPACE, 'schemaLocation'),
        f'{OAI_DC_NAMESPACE} http://www.openarchives.org/OAI/2.0/oai_dc.xsd',
    )
    add_text_element(root, DC_NAMESPACE, 'title', record.title)
    for author in record.authors:
        add_text_element(root, DC_NAMESPACE, 'creator', author.format_name())
    add_text_element(root, DC_NAMESPACE, 'date', record.year)
    add_text_element(root, DC_NAMESPACE, 'source', format_source(record))
    add_text_element(root, DC_NAMESPACE, 'identifier', DOCUMENT_URL_TEMPLATE.format(record.id))
    if record.doi:
        add_text_element(root, DC_NAMESPACE, 'identifier', f'doi:{record.doi}')

    return root


def build_zb_preview(record: BibRecord):
    """Dublin Core fields plus MSC classifications. Redacted records never carry third-party text."""
    root = etree.Element(
        qualify(ZB_PREVIEW_NAMESPACE, 'zbmath'),
        nsmap={'zbmath': ZB_PREVIEW_NAMESPACE, 'xsi': XSI_NAMESPACE},
    )
    root.set(
        qualify(XSI_NAMESPACE, 'schemaLocation'),
        f'{ZB_PREVIEW_NAMESPACE} https://zbmath.org/OAI/2.0/oai_zb_preview.xsd',
    )
    add_text_element(root, ZB_PREVIEW_NAMESPACE, 'document_id', record.id)
    add_text_element(root, ZB_PREVIEW_NAMESPACE, 'document_title', record.title)

    if record.authors:
        authors = etree.SubElement(root, qualify(ZB_PREVIEW_NAMESPACE, 'authors'))
        for author in record.authors:
            attributes = {'author_id': author.author_id} if author.author_id else {}
            add_text_element(authors, ZB_PREVIEW_NAMESPACE, 'author', author.format_name(), **attributes)

    add_text_element(root, ZB_PREVIEW_NAMESPACE, 'publication_year', record.year)
    add_text_element(root, ZB_PREVIEW_NAMESPACE, 'serial', record.serial)
    add_text_element(root, ZB_PREVIEW_NAMESPACE, 'volume', record.volume)
    add_text_element(root, ZB_PREVIEW_NAMESPACE, 'pages', record.pages)
    add_text_element(root, ZB_PREVIEW_NAMESPACE, 'source', format_source(record))
    add_text_element(root, ZB_PREVIEW_NAMESPACE, 'doi', record.doi)

    if record.msc:
        classifications = etree.SubElement(root, qualify(ZB_PREVIEW_NAMESPACE, 'classifications'))
        for code in record.msc:
            add_text_element(classifications, ZB_PREVIEW_NAMESPACE, 'classification', code)

    if record.abstract_redacted:
        etree.SubElement(root, qualify(ZB_PREVIEW_NAMESPACE, 'review'), redacted='true')

    return root
