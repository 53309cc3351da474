import contextlib
import shutil
from pathlib import Path
from typing import Union

import atomicwrites

from marebito.business_logic.exceptions import DataIOError


@contextlib.contextmanager
def atomic_write_append(file_path, mode, **kwargs):
    append = 'a' in mode
    if append:
        kwargs.setdefault('overwrite', True)
    with atomicwrites.atomic_write(file_path, mode=mode.replace('a', 'w'), **kwargs) as fo:
        if append and Path(file_path).exists():
            with open(file_path, 'rb' if 'b' in mode else 'r') as cur_fo:
                shutil.copyfileobj(cur_fo, fo)
        yield fo


def ensure_directory_exists_for_file_path(file_path: Union[str, Path]):
    Path(file_path).parent.mkdir(parents=True, exist_ok=True)


def write_text_atomic(file_path: Union[str, Path], text: str):
    """Replace `file_path` content with `text` so readers never observe a partial file."""
    try:
        ensure_directory_exists_for_file_path(file_path)
        with atomic_write_append(file_path, mode='w', overwrite=True, encoding='utf-8') as fo:
            fo.write(text)
    except OSError as ex:
        raise DataIOError(f'Could not write {file_path}: {ex}') from ex


def write_lines_atomic(file_path: Union[str, Path], lines):
    write_text_atomic(file_path, ''.join(line + '\n' for line in lines))
