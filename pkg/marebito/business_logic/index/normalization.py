import re

from unidecode import unidecode

from .stopwords import STOPWORDS

TOKEN_SEPARATOR_RE = re.compile(r'[^a-z0-9]+')
MIN_TOKEN_LENGTH = 2


def normalize(text: str) -> list[str]:
    """
    Lowercase, fold diacritics to ASCII, split on non-alphanumerics, drop short tokens and
    stopwords. Token order and repetitions are preserved.
    """
    if not text:
        return []

    folded = unidecode(text).lower()
    return [
        token for token in TOKEN_SEPARATOR_RE.split(folded)
        if len(token) >= MIN_TOKEN_LENGTH and token not in STOPWORDS
    ]


def normalize_surnames(surnames) -> list[str]:
    return [token for surname in surnames for token in normalize(surname)]


def normalize_to_set(text: str) -> frozenset[str]:
    return frozenset(normalize(text))
