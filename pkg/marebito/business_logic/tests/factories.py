from datetime import date

from marebito.business_logic.classifier import LinearModel
from marebito.business_logic.models import (
    FEATURE_COUNT, FEATURE_NAMES, AuthorName, BibRecord, GoldItem, LinkSource, ScholixLink
)
from marebito.core.utils.factory import Factory, factory


@factory(AuthorName)
class AuthorNameFactory(Factory):
    surname = 'Einstein'
    given = 'A.'
    author_id = 'einstein.albert'


@factory(BibRecord)
class BibRecordFactory(Factory):
    id = 1  # noqa: A003
    title = 'Zur Elektrodynamik bewegter Körper'
    authors = lambda: [AuthorNameFactory()]  # noqa: E731
    year = 1905
    serial = 'Ann. Phys.'
    volume = '17'
    pages = '891-921'
    doi = '10.1002/andp.19053221004'
    msc = ['83A05']
    abstract_redacted = False


@factory(LinkSource)
class LinkSourceFactory(Factory):
    provider = 'DLMF'
    object_id = 'bib1'
    url = 'https://dlmf.nist.gov/bib/#bib1'


@factory(ScholixLink)
class ScholixLinkFactory(Factory):
    source = LinkSourceFactory()
    target = 1
    link_publication_date = date(2021, 6, 1)
    link_provider = 'zbMATH Open'
    relationship = 'References'


@factory(GoldItem)
class GoldItemFactory(Factory):
    input = 'A. Einstein, Zur Elektrodynamik bewegter Körper, Ann. Phys. 17 (1905), 891-921.'  # noqa: A003
    expected_id = 1


def make_title_model():
    # Score grows with title overlap only
    weights = [0.0] * FEATURE_COUNT
    weights[FEATURE_NAMES.index('title_jaccard')] = 10.0
    return LinearModel(weights=weights, bias=-5.0)
