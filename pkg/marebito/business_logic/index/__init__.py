from .inverted_index import (  # noqa: F401
    BM25_B, BM25_K1, DEFAULT_CANDIDATE_COUNT, Index, build_index, candidates, get_query_tokens, get_record_tokens
)
from .normalization import normalize  # noqa: F401
from .snapshot import index_snapshot_exists, load_index_snapshot, save_index_snapshot  # noqa: F401
from .stopwords import STOPWORDS  # noqa: F401
