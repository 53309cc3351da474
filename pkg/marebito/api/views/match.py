from django.conf import settings

from drf_spectacular.utils import extend_schema
from rest_framework.response import Response
from rest_framework.views import APIView

from marebito.business_logic.constants import DEFAULT_BATCH_CAP
from marebito.business_logic.matcher import MatchConfig, match_batch
from marebito.business_logic.state import get_service_state

from ..exceptions import ModelNotLoaded, PayloadTooLarge
from ..serializers.match import MatchRequestSerializer, MatchResultSerializer


class MatchView(APIView):

    @extend_schema(request=MatchRequestSerializer, responses=MatchResultSerializer(many=True))
    def post(self, request):
        serializer = MatchRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        citations = serializer.validated_data['citations']

        batch_cap = settings.MAREBITO.get('batch_cap', DEFAULT_BATCH_CAP)
        if len(citations) > batch_cap:
            raise PayloadTooLarge(f'At most {batch_cap} citations per request, got {len(citations)}.')
        if not citations:
            return Response([])

        state = get_service_state()
        if state.model is None:
            raise ModelNotLoaded()

        config = MatchConfig.from_settings(min_score=serializer.validated_data.get('min_score'))
        results = match_batch(citations, state.index, state.corpus, state.model, config)
        return Response(MatchResultSerializer(results, many=True).data)
