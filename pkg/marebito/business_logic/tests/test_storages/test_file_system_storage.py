import pytest

from marebito.business_logic.exceptions import DataIOError
from marebito.business_logic.storages.file_system import FileSystemStorage
from marebito.business_logic.tests.test_storages.utils import compress, decompress


@pytest.mark.parametrize('compression', ('gz', 'bz2', 'xz'))
def test_can_load_compressed_file(storage_path, compression, compressible_data):
    fss = FileSystemStorage(storage_path)
    compressed_path = storage_path / f'file.txt.{compression}'

    compress(compressed_path, compression, compressible_data)

    loaded_data = fss.load('file.txt')
    assert loaded_data == compressible_data


def test_incompressible_data_is_saved_raw(storage_path, incompressible_data):
    fss = FileSystemStorage(storage_path)
    file_path = storage_path / 'incompressible_file.txt'

    fss.save('incompressible_file.txt', binary_data=incompressible_data)

    assert file_path.exists()
    assert file_path.read_bytes() == incompressible_data


def test_no_compression_file_storage_saves_raw_files(storage_path, compressible_data):
    fss = FileSystemStorage(storage_path, compressors=())
    file_path = storage_path / 'file.txt'

    fss.save('file.txt', binary_data=compressible_data)

    assert file_path.exists()
    assert file_path.read_bytes() == compressible_data


@pytest.mark.parametrize('compression', ('gz', 'bz2', 'xz'))
def test_data_is_compressed(storage_path, compression, compressible_data):
    fss = FileSystemStorage(storage_path, compressors=(compression,))
    file_path = storage_path / f'file.txt.{compression}'

    saved_path = fss.save('file.txt', compressible_data)

    assert saved_path == file_path
    assert decompress(file_path, compression) == compressible_data


def test_best_compression_method_is_chosen(storage_path, compressible_data):
    fss = FileSystemStorage(storage_path, compressors=('gz', 'bz2', 'xz'))
    compressed_path = storage_path / 'file.txt.gz'

    fss.save('file.txt', binary_data=compressible_data)

    assert compressed_path.exists()
    assert len(compressed_path.read_bytes()) == 46


def test_save_replaces_stale_variants(storage_path, compressible_data, incompressible_data):
    fss = FileSystemStorage(storage_path, compressors=('gz',))

    fss.save('file.txt', compressible_data)
    assert (storage_path / 'file.txt.gz').exists()

    fss.save('file.txt', incompressible_data)
    assert not (storage_path / 'file.txt.gz').exists()
    assert fss.load('file.txt') == incompressible_data


def test_exists(storage_path, compressible_data):
    fss = FileSystemStorage(storage_path)
    assert not fss.exists('file.txt')

    fss.save('file.txt', compressible_data)
    assert fss.exists('file.txt')


def test_load_missing_file_raises_data_io_error(storage_path):
    fss = FileSystemStorage(storage_path)

    with pytest.raises(DataIOError):
        fss.load('missing.txt')


def test_load_corrupt_compressed_file_raises_data_io_error(storage_path):
    fss = FileSystemStorage(storage_path)
    (storage_path / 'file.txt.gz').write_bytes(b'not gzip at all')

    with pytest.raises(DataIOError):
        fss.load('file.txt')


def test_cannot_save_file_out_of_base_directory(storage_path, compressible_data):
    fss = FileSystemStorage(storage_path / 'subdir')
    file_path = '../file.txt'

    with pytest.raises(ValueError):
        fss.save(file_path, compressible_data)


def test_cannot_use_absolute_path(storage_path, compressible_data):
    fss = FileSystemStorage(storage_path)
    file_path = storage_path / 'subdir/file.txt'

    with pytest.raises(ValueError):
        fss.save(file_path, compressible_data)
