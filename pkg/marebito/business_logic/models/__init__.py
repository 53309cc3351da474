from .bib_record import AuthorName, BibRecord  # noqa: F401
from .candidate import Candidate  # noqa: F401
from .confusion_counts import ConfusionCounts, PenaltyParams  # noqa: F401
from .extracted_reference import ExtractedReference  # noqa: F401
from .feature_vector import FEATURE_COUNT, FEATURE_NAMES, FeatureVector  # noqa: F401
from .gold_item import GoldItem  # noqa: F401
from .match_result import MatchResult, RankedCandidate  # noqa: F401
from .scholix_link import LinkSource, ScholixLink  # noqa: F401
