import logging
from time import time

SKIPPED_REQUEST_MEDIA_TYPES = ('multipart/form-data',)
SKIPPED_RESPONSE_MEDIA_TYPES = ('text/html', 'text/javascript')
MAX_LOGGED_BODY_LENGTH = 2048

logger = logging.getLogger(__name__)


def truncate_body(body: str) -> str:
    if len(body) > MAX_LOGGED_BODY_LENGTH:
        return body[:MAX_LOGGED_BODY_LENGTH] + f'... ({len(body)} characters)'

    return body


def get_request_description(request):
    request_method = request.method
    description = request_method + ' ' + request.build_absolute_uri()
    if request_method in ('POST', 'PUT', 'PATCH'):
        if request.content_type in SKIPPED_REQUEST_MEDIA_TYPES:
            description += ' (hidden body)'
        else:
            request_body = request.body
            if request_body:
                description += ' BODY: ' + truncate_body(request_body.decode('utf-8', errors='ignore'))
            else:
                description += ' (empty body)'

    return description


class LoggingMiddleware:
    """
    Log every request with its response status, body and duration. Enable it in local/settings.py:

    MIDDLEWARE += ('marebito.core.middleware.LoggingMiddleware',)
    LOGGING['loggers']['marebito']['level'] = 'DEBUG'
    LOGGING['handlers']['console']['level'] = 'DEBUG'
    """

    def __init__(self, get_response):
        self.get_response = get_response

    def __call__(self, request):
        # Read the body before the view consumes the stream
        request_description = get_request_description(request)
        logger.debug(request_description)
        start_time = time()

        response = self.get_response(request)
        duration = time() - start_time

        content_type = response.get('Content-Type')
        if content_type and content_type.split(';')[0] in SKIPPED_RESPONSE_MEDIA_TYPES:
            return response

        if response.streaming:
            body = '(streaming body)'
        else:
            body = truncate_body(response.content.decode('utf-8', errors='ignore'))

        logger.debug(
            '%s RESPONSE: HTTP%s %s (%.3fs)', request_description, response.status_code, body, duration
        )

        return response
