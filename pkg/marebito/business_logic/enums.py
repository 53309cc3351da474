from enum import Enum, unique


@unique
class MatchLabel(Enum):
    MATCH = 'match'
    NO_MATCH = 'no_match'


@unique
class ModelKind(Enum):
    LINEAR = 'linear'
    FOREST = 'forest'


@unique
class QueryField(Enum):
    AUTHOR = 'au'
    TITLE = 'ti'
    PUBLICATION_YEAR = 'py'
    SOURCE = 'so'
    CLASSIFICATION = 'cc'
    DOCUMENT_ID = 'an'


@unique
class GoldSplit(Enum):
    TRAIN = 'train'
    EVAL = 'eval'
    TEST = 'test'
    ALL = 'all'
