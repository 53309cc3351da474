import threading

import pytest

from marebito.core.utils.file_lock import exclusive_file_lock, get_lock_path


class LockedException(Exception):
    pass


def test_lock_file_is_created_next_to_file(tmp_path):
    file_path = tmp_path / 'index.bin'
    with exclusive_file_lock(file_path, LockedException()):
        pass

    assert get_lock_path(file_path) == str(file_path) + '.lock'


def test_file_lock_is_exclusive_for_threads(tmp_path):
    file_path = tmp_path / 'index.bin'
    locked_event = threading.Event()
    release_event = threading.Event()

    def hold_lock():
        with exclusive_file_lock(file_path, LockedException()):
            locked_event.set()
            release_event.wait(timeout=5)

    thread = threading.Thread(target=hold_lock)
    thread.start()
    locked_event.wait(timeout=5)
    try:
        with pytest.raises(LockedException):
            with exclusive_file_lock(file_path, LockedException(), timeout=0):
                pass
    finally:
        release_event.set()
        thread.join()


def test_file_lock_can_be_acquired_again_after_release(tmp_path):
    file_path = tmp_path / 'index.bin'
    with exclusive_file_lock(file_path, LockedException()):
        pass

    with exclusive_file_lock(file_path, LockedException(), timeout=0):
        pass
