from drf_spectacular.utils import OpenApiParameter, extend_schema
from rest_framework.response import Response
from rest_framework.views import APIView

from marebito.business_logic.enums import QueryField
from marebito.business_logic.exceptions import QuerySyntaxError
from marebito.business_logic.queryparse import compile_structured, evaluate_query, parse_query
from marebito.business_logic.state import get_service_state

from ..serializers.search import PageParamsSerializer, SearchPageSerializer

QUERY_PARAM = 'q'
PAGE_PARAMS = ('page', 'page_size')


class SearchView(APIView):
    """
    Boolean search over the corpus, either with a syntax query `q` (like `ti:"zeta function" & py:1990-1999`)
    or with structured parameters combined with AND. Results are ordered by document id.
    """

    @extend_schema(
        parameters=[
            OpenApiParameter(QUERY_PARAM, str, OpenApiParameter.QUERY, description='Syntax search query'),
        ] + [OpenApiParameter(field.value, str, OpenApiParameter.QUERY) for field in QueryField] +
        [OpenApiParameter(name, int, OpenApiParameter.QUERY) for name in PAGE_PARAMS],
        responses=SearchPageSerializer,
    )
    def get(self, request):
        params = request.query_params
        page_params_serializer = PageParamsSerializer(
            data={name: params[name] for name in PAGE_PARAMS if name in params}
        )
        page_params_serializer.is_valid(raise_exception=True)
        page = page_params_serializer.validated_data['page']
        page_size = page_params_serializer.validated_data['page_size']

        search_params = {name: params[name] for name in params if name not in PAGE_PARAMS}
        query = search_params.pop(QUERY_PARAM, None)
        if query is not None:
            if search_params:
                raise QuerySyntaxError('Use either a syntax query or structured parameters, not both', 0)
            node = parse_query(query)
        else:
            node = compile_structured(search_params)

        state = get_service_state()
        record_ids = sorted(evaluate_query(node, state.corpus, state.index))
        start = (page - 1) * page_size
        records = [state.corpus.get_record(record_id) for record_id in record_ids[start:start + page_size]]
        serializer = SearchPageSerializer({
            'count': len(record_ids),
            'page': page,
            'page_size': page_size,
            'results': records,
        })
        return Response(serializer.data)
