import logging
from dataclasses import dataclass
from typing import Optional

from django.conf import settings

from .classifier import Model, load_model
from .constants import DEFAULT_PAGE_SIZE
from .corpus import Corpus, load_corpus
from .exceptions import IndexSnapshotError
from .index import Index, build_index, index_snapshot_exists, load_index_snapshot
from .links import LinkSet, load_links
from .oai import OAIRepository

logger = logging.getLogger(__name__)


def load_index_for_corpus(corpus: Corpus, snapshot_path: Optional[str]) -> Index:
    if snapshot_path and index_snapshot_exists(snapshot_path):
        try:
            return load_index_snapshot(snapshot_path, expected_generation=corpus.generation)
        except IndexSnapshotError as ex:
            logger.warning('Ignoring index snapshot %s: %s', snapshot_path, ex)

    return build_index(corpus)


@dataclass
class ServiceState:
    """
    Everything the service reads: corpus, index, optional model and link set. Request handlers
    never mutate it; `reload()` swaps in a whole new state, which invalidates resumption tokens
    issued for the previous corpus generation.
    """

    corpus: Corpus
    index: Index
    link_set: LinkSet
    oai_repository: OAIRepository
    model: Optional[Model] = None

    _instance = None

    @property
    def generation(self) -> str:
        return self.corpus.generation

    @classmethod
    def load(cls, marebito_settings: Optional[dict] = None, oai_settings: Optional[dict] = None) -> 'ServiceState':
        marebito_settings = settings.MAREBITO if marebito_settings is None else marebito_settings
        oai_settings = settings.OAI_PMH if oai_settings is None else oai_settings
        corpus_path = marebito_settings.get('corpus_path')
        corpus = load_corpus(corpus_path) if corpus_path else Corpus().freeze()
        index = load_index_for_corpus(corpus, marebito_settings.get('index_snapshot_path'))

        model_path = marebito_settings.get('model_path')
        model = load_model(model_path) if model_path else None

        links_path = marebito_settings.get('links_path')
        link_set = load_links(links_path, corpus) if links_path else LinkSet(corpus=corpus)

        logger.info(
            'Service state loaded: %s records, model %s, %s links', len(corpus), model.kind if model else None,
            len(link_set)
        )
        return cls(
            corpus=corpus,
            index=index,
            link_set=link_set,
            oai_repository=OAIRepository(
                corpus, oai_settings, page_size=marebito_settings.get('page_size', DEFAULT_PAGE_SIZE)
            ),
            model=model,
        )

    @classmethod
    def get_instance(cls) -> 'ServiceState':
        instance = cls._instance
        if not instance:
            instance = cls.load()
            ServiceState._instance = instance

        return instance

    @classmethod
    def reload(cls) -> 'ServiceState':
        ServiceState._instance = cls.load()
        return ServiceState._instance

    @classmethod
    def set_instance(cls, instance: Optional['ServiceState']):
        ServiceState._instance = instance

    @classmethod
    def clear_instance_cache(cls):
        ServiceState._instance = None


def get_service_state() -> ServiceState:
    return ServiceState.get_instance()
