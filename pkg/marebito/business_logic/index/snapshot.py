import logging
from pathlib import Path
from typing import Optional, Union

import msgpack

from marebito.core.logging import timeit
from marebito.core.utils.file_lock import exclusive_file_lock

from ..exceptions import DataIOError, IndexSnapshotError
from ..storages.file_system import FileSystemStorage
from .inverted_index import Index

SNAPSHOT_MAGIC = b'ZBIX1'
SNAPSHOT_VERSION = 1

logger = logging.getLogger(__name__)


def get_storage(path: Union[str, Path], compressors=()) -> tuple[FileSystemStorage, str]:
    path = Path(path)
    return FileSystemStorage(path.parent, compressors=compressors), path.name


def pack_index(index: Index) -> bytes:
    payload = {
        'version': SNAPSHOT_VERSION,
        'corpus_generation': index.corpus_generation,
        'postings': {token: [list(posting) for posting in postings] for token, postings in index.postings.items()},
        'doc_lengths': [[record_id, length] for record_id, length in sorted(index.doc_lengths.items())],
    }
    return SNAPSHOT_MAGIC + msgpack.packb(payload, use_bin_type=True)


def unpack_index(data: bytes) -> Index:
    if not data.startswith(SNAPSHOT_MAGIC):
        raise IndexSnapshotError('Not an index snapshot (bad magic bytes)')

    try:
        payload = msgpack.unpackb(data[len(SNAPSHOT_MAGIC):], raw=False)
    except (ValueError, msgpack.UnpackException) as ex:
        raise IndexSnapshotError(f'Corrupted index snapshot: {ex}') from ex

    if not isinstance(payload, dict):
        raise IndexSnapshotError('Corrupted index snapshot: payload must be a map')

    version = payload.get('version')
    if version != SNAPSHOT_VERSION:
        raise IndexSnapshotError(f'Unsupported index snapshot version: {version!r}')

    try:
        return Index(
            postings={
                token: [(record_id, term_frequency) for record_id, term_frequency in postings]
                for token, postings in payload['postings'].items()
            },
            doc_lengths={record_id: length for record_id, length in payload['doc_lengths']},
            corpus_generation=payload.get('corpus_generation'),
        )
    except (KeyError, TypeError, ValueError) as ex:
        raise IndexSnapshotError(f'Corrupted index snapshot: {ex!r}') from ex


@timeit(logger=logger)
def save_index_snapshot(index: Index, path: Union[str, Path], compressors=()) -> Path:
    storage, file_name = get_storage(path, compressors)
    with exclusive_file_lock(path, DataIOError(f'Could not lock index snapshot {path}')):
        written_path = storage.save(file_name, pack_index(index))

    logger.info('Saved index snapshot of %s records to %s', index.doc_count, written_path)
    return written_path


@timeit(logger=logger)
def load_index_snapshot(path: Union[str, Path], expected_generation: Optional[str] = None) -> Index:
    """
    Load a snapshot written by `save_index_snapshot()`, compressed or not. With
    `expected_generation` the snapshot must have been built from that corpus generation.
    """
    storage, file_name = get_storage(path)
    index = unpack_index(storage.load(file_name))
    if expected_generation is not None and index.corpus_generation != expected_generation:
        raise IndexSnapshotError(
            f'Index snapshot was built for corpus generation {index.corpus_generation}, '
            f'not {expected_generation}'
        )

    logger.info('Loaded index snapshot of %s records from %s', index.doc_count, path)
    return index


def index_snapshot_exists(path: Union[str, Path]) -> bool:
    storage, file_name = get_storage(path)
    return storage.exists(file_name)
