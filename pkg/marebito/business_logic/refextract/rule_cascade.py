import logging
import re
from typing import Optional

from marebito.business_logic.exceptions import EmptyInputError, UnparseableError
from marebito.business_logic.validators import MAX_YEAR, MIN_YEAR

from ..models import ExtractedReference
from .authors import parse_author_block, split_parts
from .base import ReferenceExtractor

DOI_RE = re.compile(r'(?:https?://(?:dx\.)?doi\.org/|\bdoi:\s*)?(?P<doi>10\.\d{4,9}/\S+)', re.IGNORECASE)
DOI_TRAILING_PUNCTUATION = '.,;:)]}>"\''
YEAR_RE = re.compile(
    r'\(\s*(?P<parenthesized>\d{4})[a-z]?\s*\)'
    r'|(?:(?<=,)|^)\s*(?P<delimited>\d{4})[a-z]?\s*(?=,|\.?\s*$)'
)
TRAILING_RE = re.compile(
    r',\s*(?P<container>[^,()]+?)\s+(?P<volume>\d+)\s*\(\s*\d{4}[a-z]?\s*\)'
    r'\s*(?:[,:]\s*(?:pp?\.\s*)?(?P<pages>\d+(?:\s*[-–—]+\s*\d+)?))?[\s.,;]*$'
)
NON_TITLE_PART_RE = re.compile(r'[\d\s().,:;\-–—]*')
TITLE_STRIP_CHARS = ' .,;:"\'“”‘’'
HEAD_STRIP_CHARS = ' ,;.'

logger = logging.getLogger(__name__)


def find_doi(text: str) -> tuple[Optional[str], str]:
    """Return the DOI and the text with the DOI (and its `doi:` or resolver prefix) cut out."""
    match = DOI_RE.search(text)
    if not match:
        return None, text

    doi = match['doi'].rstrip(DOI_TRAILING_PUNCTUATION)
    end = match.start('doi') + len(doi)
    return doi, text[:match.start()] + text[end:]


def find_year(text: str) -> Optional[int]:
    for match in YEAR_RE.finditer(text):
        year = int(match['parenthesized'] or match['delimited'])
        if MIN_YEAR <= year <= MAX_YEAR:
            return year

    return None


def contains_letter(text: str) -> bool:
    return any(char.isalpha() for char in text)


def pick_title(parts: list[str]) -> Optional[str]:
    candidates = [part.strip(TITLE_STRIP_CHARS) for part in parts if not NON_TITLE_PART_RE.fullmatch(part)]
    candidates = [candidate for candidate in candidates if contains_letter(candidate)]
    if not candidates:
        return None

    # max() keeps the first of equally long segments
    return max(candidates, key=len)


class RuleCascadeExtractor(ReferenceExtractor):
    """
    Deterministic extractor: DOI by regex, then year, then the trailing
    "<container> <volume> (<year>), <pages>" pattern, then the author block, and finally the title
    as the longest remaining segment. Fields are only taken from the input, never invented.
    """

    def extract(self, citation: str) -> ExtractedReference:
        if not citation or not citation.strip():
            raise EmptyInputError()

        doi, work = find_doi(citation.strip())
        year = find_year(work)

        container = volume = pages = None
        trailing_match = TRAILING_RE.search(work)
        if trailing_match and contains_letter(trailing_match['container']):
            container = trailing_match['container'].strip()
            volume = trailing_match['volume']
            pages = trailing_match['pages']
            head = work[:trailing_match.start()]
        else:
            trailing_match = None
            head = work

        parts = [part for part in split_parts(head.strip(HEAD_STRIP_CHARS)) if part]
        authors, title_start = parse_author_block(parts)

        # A title is only recognized when bounded by an author block or a container
        title = pick_title(parts[title_start:]) if authors or trailing_match else None

        reference = ExtractedReference(
            raw=citation,
            authors=authors,
            title=title,
            container=container,
            year=year,
            volume=volume,
            pages=pages,
            doi=doi,
        )
        if not reference.has_identifying_field():
            raise UnparseableError()

        logger.debug('Extracted %r from %r', reference, citation)
        return reference
