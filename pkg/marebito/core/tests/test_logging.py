import logging

import pytest

from marebito.business_logic.exceptions import ValidationError
from marebito.core.logging import timeit, validates

logger = logging.getLogger(__name__)


class SampleConfig:

    @validates()
    def validate_page_size(self, value):
        if value < 1:
            raise ValidationError('Page size must be positive')


def test_validates_decorator_derives_target(caplog):
    with caplog.at_level(logging.DEBUG, logger='marebito.core.logging.validation'):
        SampleConfig().validate_page_size(5)
        with pytest.raises(ValidationError):
            SampleConfig().validate_page_size(0)

    assert caplog.messages == [
        'Validating sample config page size',
        'Sample config page size is valid',
        'Validating sample config page size',
        'Sample config page size is invalid: Page size must be positive',
    ]


def test_validates_context_manager(caplog):
    with caplog.at_level(logging.DEBUG, logger='marebito.core.logging.validation'):
        with validates('record title'):
            pass

    assert caplog.messages == ['Validating record title', 'Record title is valid']


def test_timeit_reports_slow_calls(caplog):

    @timeit(logger=logger, slow_threshold_ms=-1)
    def build():
        return 42

    with caplog.at_level(logging.DEBUG, logger=__name__):
        assert build() == 42

    assert caplog.records[-1].levelno == logging.WARNING
    assert caplog.records[-1].getMessage().startswith('Slow build()')


def test_timeit_logs_exceptions(caplog):

    @timeit(logger=logger)
    def fail():
        raise RuntimeError('boom')

    with caplog.at_level(logging.DEBUG, logger=__name__):
        with pytest.raises(RuntimeError):
            fail()

    assert caplog.records[-1].levelno == logging.ERROR
