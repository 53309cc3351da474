from drf_spectacular.types import OpenApiTypes
from drf_spectacular.utils import OpenApiParameter, extend_schema
from rest_framework.exceptions import ValidationError
from rest_framework.response import Response
from rest_framework.views import APIView

from marebito.business_logic.links.scholix import link_to_scholix
from marebito.business_logic.state import get_service_state

FILTER_NAMES = ('msc', 'author_id', 'provider')


class LinksView(APIView):
    """Scholix links filtered by the MSC code or author of the target document, or by source provider."""

    @extend_schema(
        parameters=[OpenApiParameter(name, str, OpenApiParameter.QUERY) for name in FILTER_NAMES],
        responses=OpenApiTypes.OBJECT,
    )
    def get(self, request):
        filters = {name: request.query_params[name] for name in FILTER_NAMES if name in request.query_params}
        if len(filters) != 1:
            raise ValidationError({'detail': f'Exactly one of {", ".join(FILTER_NAMES)} is required'})

        link_set = get_service_state().link_set
        (name, value), = filters.items()
        if name == 'msc':
            links = link_set.links_by_msc(value)
        elif name == 'author_id':
            links = link_set.links_by_author(value)
        else:
            links = link_set.links_by_provider(value)

        return Response([link_to_scholix(link) for link in links])
