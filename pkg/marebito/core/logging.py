import functools
import logging
from time import time

from ..business_logic.exceptions import ValidationError
from .utils.misc import humanize_camel_case, upper_first

module_logger = logging.getLogger(__name__)
validation_logger = logging.getLogger(__name__ + '.validation')


class SentryFilter(logging.Filter):

    def filter(self, record):  # noqa: A003
        if record.levelno >= logging.WARNING and getattr(record, 'exc_info', None) is None:
            record.exc_info = (None, None, None)  # trigger Sentry to dump stack trace

        return True


class FilteringNullHandler(logging.NullHandler):

    def handle(self, record):
        return self.filter(record)


def get_callable_name(callable_, args, is_method):
    if is_method and args:
        return f'{args[0].__class__.__name__}.{callable_.__name__}'

    return callable_.__name__


def timeit(logger=module_logger, level=logging.DEBUG, is_method=False, slow_threshold_ms=None):
    """
    Log the call and its duration. Calls lasting longer than `slow_threshold_ms` are reported
    at WARNING level regardless of `level`.
    """

    def decorator(callable_):

        @functools.wraps(callable_)
        def wrapper(*args, **kwargs):
            callable_name = get_callable_name(callable_, args, is_method)
            logger.log(level, 'Calling %s()', callable_name)
            start = time()
            try:
                rv = callable_(*args, **kwargs)
            except Exception:
                logger.exception('Exception in %s() after %.3fms', callable_name, (time() - start) * 1000)
                raise

            duration_ms = (time() - start) * 1000
            if slow_threshold_ms is not None and duration_ms > slow_threshold_ms:
                logger.warning('Slow %s(): %.3fms (threshold %sms)', callable_name, duration_ms, slow_threshold_ms)
            else:
                logger.log(level, 'Returned from %s() in %.3fms', callable_name, duration_ms)

            return rv

        return wrapper

    return decorator


def timeit_method(logger=module_logger, level=logging.DEBUG, slow_threshold_ms=None):
    return timeit(logger=logger, level=level, is_method=True, slow_threshold_ms=slow_threshold_ms)


class validates:
    """
    Trace validation of a target: usable as a decorator of `validate*` methods (without a target the
    name is derived from the class and method names) or as a context manager around a code block.
    """

    def __init__(self, target=None, logger=validation_logger, level=logging.DEBUG):
        self.target = target
        self.logger = logger
        self.level = level

    def log_started(self, target):
        self.logger.log(self.level, 'Validating %s', target)

    def log_passed(self, target):
        self.logger.log(self.level, '%s is valid', upper_first(target))

    def log_failed(self, target, exception):
        message = str(exception) if isinstance(exception, ValidationError) else repr(exception)
        self.logger.log(self.level, '%s is invalid: %s', upper_first(target), message)

    def __enter__(self):
        self.target = self.target or 'code block'
        self.log_started(self.target)
        return self

    def __exit__(self, *exc_info):
        if any(exc_info):
            self.log_failed(self.target, exc_info[1])
        else:
            self.log_passed(self.target)

    def get_target(self, callable_, args):
        if self.target is not None:
            return self.target

        parent_name = humanize_camel_case(args[0].__class__.__name__, apply_upper_first=False)
        name = callable_.__name__.removeprefix('validate').strip('_').replace('_', ' ')
        return f'{parent_name} {name}'.strip()

    def __call__(self, callable_):

        @functools.wraps(callable_)
        def wrapper(*args, **kwargs):
            target = self.get_target(callable_, args)
            self.log_started(target)
            try:
                rv = callable_(*args, **kwargs)
            except Exception as ex:
                self.log_failed(target, ex)
                raise

            self.log_passed(target)
            return rv

        return wrapper
