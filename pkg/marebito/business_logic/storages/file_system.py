import bz2
import gzip
import logging
import lzma
import os
from pathlib import Path
from typing import Union

from marebito.business_logic.exceptions import DataIOError
from marebito.core.logging import timeit_method
from marebito.core.utils.atomic_write import atomic_write_append, ensure_directory_exists_for_file_path

COMPRESSION_FUNCTIONS = {
    'gz': lambda data: gzip.compress(data, compresslevel=9),
    'bz2': lambda data: bz2.compress(data, compresslevel=9),
    'xz': lzma.compress
}

DECOMPRESSION_FUNCTIONS = {
    'gz': gzip.decompress,
    'bz2': bz2.decompress,
    'xz': lzma.decompress,
}

logger = logging.getLogger(__name__)


def get_compressed_path(file_path: Union[str, Path], compressor: str) -> Path:
    return Path(str(file_path) + '.' + compressor)


def strip_compression_extension(filename: str) -> str:
    for compressor in DECOMPRESSION_FUNCTIONS:
        if filename.endswith('.' + compressor):
            return filename[:-len(compressor) - 1]

    return filename


class FileSystemStorage:
    """
    Compressing / decompressing storage for whole-file artifacts. A file saved as `name` ends up
    as `name` or `name.<compressor>`, whichever is smallest; `load()` finds either form.
    """

    def __init__(self, base_path: Union[str, Path], compressors=tuple(COMPRESSION_FUNCTIONS)):
        self.base_path = Path(base_path).resolve()
        self.compressors = compressors

    @timeit_method()
    def save(self, file_path: Union[str, Path], binary_data: bytes) -> Path:
        """Atomically replace the file (in any of its forms). Return the path actually written."""
        file_path = self._get_absolute_path(file_path)
        best_path, best_data = self._compress(file_path, binary_data)
        try:
            ensure_directory_exists_for_file_path(best_path)
            with atomic_write_append(best_path, mode='wb', overwrite=True) as fo:
                fo.write(best_data)

            for stale_path in self._get_variants(file_path):
                if stale_path != best_path and stale_path.exists():
                    logger.debug('Removing stale %s', stale_path)
                    os.remove(stale_path)
        except OSError as ex:
            raise DataIOError(f'Could not write {best_path}: {ex}') from ex

        return best_path

    def load(self, file_path: Union[str, Path]) -> bytes:
        file_path = self._get_absolute_path(file_path)
        for decompressor, func in DECOMPRESSION_FUNCTIONS.items():
            path = get_compressed_path(file_path, decompressor)
            try:
                with open(path, mode='rb') as fo:
                    data = fo.read()
            except OSError:
                continue

            logger.debug('Loading %s compressed file %s', decompressor, path)
            try:
                return func(data)  # type: ignore
            except (OSError, EOFError, ValueError, lzma.LZMAError) as ex:
                raise DataIOError(f'Could not decompress {path}: {ex}') from ex

        try:
            with open(file_path, mode='rb') as fo:
                return fo.read()
        except OSError as ex:
            raise DataIOError(f'Could not read {file_path}: {ex}') from ex

    def exists(self, file_path: Union[str, Path]) -> bool:
        return any(path.exists() for path in self._get_variants(self._get_absolute_path(file_path)))

    def _get_variants(self, file_path: Path):
        yield file_path
        for compressor in DECOMPRESSION_FUNCTIONS:
            yield get_compressed_path(file_path, compressor)

    def _get_absolute_path(self, file_path: Union[str, Path]) -> Path:
        base_path = self.base_path
        path = Path(file_path)
        abs_path = (base_path / path).resolve()

        if path.is_absolute():
            raise ValueError(f"Cannot use absolute path: '{path}'")

        if not abs_path.is_relative_to(base_path):
            raise ValueError(f"Path '{abs_path}' is not relative to '{base_path}'")

        return abs_path

    @timeit_method()
    def _compress(self, file_path: Path, original_data: bytes) -> tuple[Path, bytes]:
        best_path = file_path
        best_data = original_data

        logger.debug('File %s size: %s bytes', file_path, len(original_data))
        for compressor in self.compressors:
            compressed_data = COMPRESSION_FUNCTIONS[compressor](original_data)  # type: ignore
            compressed_size = len(compressed_data)
            logger.debug(
                'File %s compressed with %s size: %s bytes (%.2f ratio)', file_path, compressor, compressed_size,
                compressed_size / max(len(original_data), 1)
            )
            if compressed_size < len(best_data):
                best_path = get_compressed_path(file_path, compressor)
                best_data = compressed_data

        return best_path, best_data
