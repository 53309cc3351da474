import contextlib
from pathlib import Path
from typing import Union

import filelock

LOCK_SUFFIX = '.lock'
DEFAULT_LOCK_TIMEOUT_SECONDS = 30


def get_lock_path(file_path: Union[str, Path]) -> str:
    return str(file_path) + LOCK_SUFFIX


@contextlib.contextmanager
def exclusive_file_lock(file_path: Union[str, Path], exception, timeout=DEFAULT_LOCK_TIMEOUT_SECONDS):
    """Hold an inter-process lock next to `file_path`; raise `exception` if it is not acquired in time."""
    lock = filelock.FileLock(get_lock_path(file_path), timeout=timeout)
    try:
        with lock:
            yield lock
    except filelock.Timeout:
        raise exception
