"""marebito URL Configuration

Service routes live at the root (`/oai`, `/match`, `/search`, ...), the OpenAPI schema under `api/`.
"""
from django.urls import include, path

from drf_spectacular.views import SpectacularAPIView, SpectacularSwaggerView

import marebito.api.urls

API_PREFIX = 'api/'

urlpatterns = [
    path('', include(marebito.api.urls)),
    path(API_PREFIX + 'schema/', SpectacularAPIView.as_view(), name='schema'),
    path(API_PREFIX + 'schema/swagger-ui/', SpectacularSwaggerView.as_view(url_name='schema'), name='swagger'),
]
