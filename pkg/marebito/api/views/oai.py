from drf_spectacular.types import OpenApiTypes
from drf_spectacular.utils import OpenApiParameter, extend_schema
from rest_framework.parsers import FormParser
from rest_framework.renderers import BaseRenderer
from rest_framework.response import Response
from rest_framework.views import APIView

from marebito.business_logic.state import get_service_state

OAI_ARGUMENT_NAMES = ('identifier', 'metadataPrefix', 'from', 'until', 'set', 'resumptionToken')


class OAIXMLRenderer(BaseRenderer):
    media_type = 'text/xml'
    format = 'xml'  # noqa: A003
    charset = 'utf-8'

    def render(self, data, accepted_media_type=None, renderer_context=None):
        if isinstance(data, bytes):
            return data

        return str(data).encode(self.charset)


class OAIView(APIView):
    """OAI-PMH 2.0 endpoint. Protocol errors are reported inside the XML document with HTTP 200."""

    renderer_classes = [OAIXMLRenderer]
    parser_classes = [FormParser]

    @extend_schema(
        parameters=[OpenApiParameter('verb', str, OpenApiParameter.QUERY, required=True)] +
        [OpenApiParameter(name, str, OpenApiParameter.QUERY) for name in OAI_ARGUMENT_NAMES],
        responses={(200, 'text/xml'): OpenApiTypes.STR},
    )
    def get(self, request):
        return self.handle(request.query_params)

    @extend_schema(responses={(200, 'text/xml'): OpenApiTypes.STR})
    def post(self, request):
        return self.handle(request.data)

    @staticmethod
    def handle(params):
        verbs = params.getlist('verb')
        verb = verbs[0] if len(verbs) == 1 else None
        args = {name: params.getlist(name) for name in params if name != 'verb'}
        content = get_service_state().oai_repository.handle_oai(verb, args)
        return Response(content, content_type='text/xml; charset=utf-8')
