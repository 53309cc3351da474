"""
Author name recognition for citation strings.

Accepted shapes: "A. Einstein", "A. B. Einstein", "J.-P. Serre", "Einstein A.", and the
comma-inverted "Einstein, A." / "Einstein, Albert". Names are separated by commas, semicolons,
"and" or "&". Lowercase particles (van, von, de, ...) may precede a surname.
"""
import re
from typing import NamedTuple, Optional

from ..models import AuthorName

INITIALS_PATTERN = r'(?:[^\W\d_]{1,2}\.\s*-?\s*)+'
INITIALS_RE = re.compile(INITIALS_PATTERN)
INITIALS_FIRST_RE = re.compile(rf'(?P<given>{INITIALS_PATTERN})(?P<surname>\S.*)')
SURNAME_INITIALS_RE = re.compile(rf'(?P<surname>.+?)\s+(?P<given>{INITIALS_PATTERN})')
PART_SEPARATOR_RE = re.compile(r'[,;]')
CONJUNCTION_RE = re.compile(r'\s+(?:and|&)\s+')
LEADING_CONJUNCTION_RE = re.compile(r'^(?:and|&)\s+')

SURNAME_PARTICLES = frozenset((
    'da', 'de', 'del', 'della', 'den', 'der', 'di', 'dos', 'du', 'la', 'le', 'ten', 'ter', 'van', 'von', 'zu'
))
NAME_PUNCTUATION = frozenset("'’-")
MAX_GIVEN_NAME_WORDS = 3


class SubPart(NamedTuple):
    part_index: int
    text: str


def is_initials(text: str) -> bool:
    return bool(text) and text[0].isupper() and INITIALS_RE.fullmatch(text) is not None


def is_name_word(word: str) -> bool:
    return (
        len(word) > 1 and word[0].isupper() and word[-1] not in NAME_PUNCTUATION and
        all(char.isalpha() or char in NAME_PUNCTUATION for char in word)
    )


def is_surname(text: str) -> bool:
    words = text.split()
    while len(words) > 1 and words[0] in SURNAME_PARTICLES:
        words = words[1:]

    return len(words) == 1 and is_name_word(words[0])


def is_given_name(text: str) -> bool:
    if is_initials(text):
        return True

    words = text.split()
    if not 1 <= len(words) <= MAX_GIVEN_NAME_WORDS or not is_name_word(words[0]):
        return False

    return all(is_name_word(word) or is_initials(word) for word in words[1:])


def parse_single_name(text: str) -> Optional[AuthorName]:
    """Recognize "I. Surname" or "Surname I." within one separator-free chunk."""
    match = INITIALS_FIRST_RE.fullmatch(text)
    if match and is_initials(match['given'].strip()) and is_surname(match['surname'].strip()):
        return AuthorName(surname=match['surname'].strip(), given=match['given'].strip())

    match = SURNAME_INITIALS_RE.fullmatch(text)
    if match and is_surname(match['surname'].strip()) and is_initials(match['given'].strip()):
        return AuthorName(surname=match['surname'].strip(), given=match['given'].strip())

    return None


def split_parts(text: str) -> list[str]:
    return [part.strip() for part in PART_SEPARATOR_RE.split(text)]


def split_sub_parts(parts: list[str]) -> list[SubPart]:
    sub_parts = []
    for part_index, part in enumerate(parts):
        part = LEADING_CONJUNCTION_RE.sub('', part)
        for chunk in CONJUNCTION_RE.split(part):
            chunk = chunk.strip()
            if chunk:
                sub_parts.append(SubPart(part_index, chunk))

    return sub_parts


def parse_author_block(parts: list[str]) -> tuple[list[AuthorName], int]:
    """
    Consume author names from the start of comma-separated `parts`. Returns the authors and the
    index of the first part that is not part of the author block. A part is consumed as a whole
    or not at all.
    """
    sub_parts = split_sub_parts(parts)
    parsed: list[tuple[int, AuthorName]] = []  # (index of the last part the name spans, name)
    position = 0
    stop_part_index = len(parts)
    while position < len(sub_parts):
        part_index, text = sub_parts[position]
        author = parse_single_name(text)
        if author:
            parsed.append((part_index, author))
            position += 1
            continue

        if position + 1 < len(sub_parts):
            next_part_index, next_text = sub_parts[position + 1]
            if next_part_index != part_index and is_surname(text) and is_given_name(next_text):
                parsed.append((next_part_index, AuthorName(surname=text, given=next_text)))
                position += 2
                continue

        stop_part_index = part_index
        break

    while parsed and parsed[-1][0] >= stop_part_index:
        parsed.pop()

    if not parsed:
        return [], 0

    stop_part_index = min(stop_part_index, max(index for index, _ in parsed) + 1)

    return [author for _, author in parsed], stop_part_index


def parse_free_name(text: str) -> Optional[AuthorName]:
    """Last resort for structured input: the last word is the surname, the rest is the given name."""
    words = text.split()
    if not words:
        return None

    given = ' '.join(words[:-1]) or None
    return AuthorName(surname=words[-1], given=given)


def parse_author_names(text: str) -> list[AuthorName]:
    parts = [part for part in split_parts(text) if part]
    authors, stop_part_index = parse_author_block(parts)
    for part in parts[stop_part_index:]:
        for sub_part in split_sub_parts([part]):
            author = parse_free_name(sub_part.text)
            if author:
                authors.append(author)

    return authors
