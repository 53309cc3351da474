from typing import Optional


class MarebitoError(Exception):
    pass


class ValidationError(MarebitoError):

    def __init__(self, message):
        super(ValidationError, self).__init__(message)


class InvalidRecordError(ValidationError):

    def __init__(self, field, message=None):
        self.field = field
        super().__init__(message or f'Invalid record field: {field}')


class InvalidFieldError(ValidationError):

    def __init__(self, field, message=None):
        self.field = field
        super().__init__(message or f'Invalid field: {field}')


class BadMscCodeError(ValidationError):

    def __init__(self, code):
        self.code = code
        super().__init__(f'Invalid MSC code: {code!r}')


class BadRatiosError(ValidationError):
    pass


class BadConfigError(ValidationError):
    pass


class ParseError(MarebitoError):

    def __init__(self, message, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f'Line {line}: {message}'
        super().__init__(message)


class DuplicateIdError(MarebitoError):

    def __init__(self, record_id):
        self.record_id = record_id
        super().__init__(f'Duplicate record id: {record_id}')


class DataIOError(MarebitoError):
    pass


class CorpusFrozenError(MarebitoError):
    pass


class EmptyInputError(MarebitoError):

    def __init__(self, message=None):
        super().__init__(message or 'Input is empty')


class UnparseableError(MarebitoError):

    def __init__(self, message=None):
        super().__init__(message or 'No author, title or DOI could be located')


class EmptyTrainingSetError(MarebitoError):
    pass


class SingleClassDataError(MarebitoError):
    pass


class DimensionMismatchError(MarebitoError):

    def __init__(self, expected, actual):
        self.expected = expected
        self.actual = actual
        super().__init__(f'Expected feature vector of length {expected}, got {actual}')


class ModelFormatError(ParseError):
    pass


class VersionMismatchError(ModelFormatError):
    pass


class FeatureOrderMismatchError(ModelFormatError):
    pass


class IndexSnapshotError(ParseError):
    pass


class QueryError(MarebitoError):

    def __init__(self, message, offset: int):
        self.offset = offset
        super().__init__(message)


class QuerySyntaxError(QueryError):
    pass


class UnknownFieldError(QueryError):

    def __init__(self, field, offset: int):
        self.field = field
        super().__init__(f'Unknown field: {field}', offset)


class ResumptionTokenError(MarebitoError):
    pass
