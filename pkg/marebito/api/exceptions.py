from rest_framework import status
from rest_framework.exceptions import APIException
from rest_framework.response import Response
from rest_framework.views import exception_handler as drf_exception_handler

from marebito.business_logic.exceptions import QueryError, ValidationError


class PayloadTooLarge(APIException):
    status_code = status.HTTP_413_REQUEST_ENTITY_TOO_LARGE
    default_detail = 'Request payload is too large.'
    default_code = 'payload_too_large'


class ModelNotLoaded(APIException):
    status_code = status.HTTP_503_SERVICE_UNAVAILABLE
    default_detail = 'No classifier model is loaded.'
    default_code = 'model_not_loaded'


def exception_handler(exc, context):
    """DRF handler that also renders domain query and validation errors as HTTP 400."""
    if isinstance(exc, QueryError):
        return Response({'detail': str(exc), 'offset': exc.offset}, status=status.HTTP_400_BAD_REQUEST)

    if isinstance(exc, ValidationError):
        return Response({'detail': str(exc)}, status=status.HTTP_400_BAD_REQUEST)

    return drf_exception_handler(exc, context)
