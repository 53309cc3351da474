from django.urls import path

from rest_framework import routers

from .views.entities import AuthorViewSet, ClassificationViewSet, DocumentViewSet, SerialViewSet
from .views.links import LinksView
from .views.match import MatchView
from .views.oai import OAIView
from .views.search import SearchView

router = routers.SimpleRouter(trailing_slash=False)
router.register('document', DocumentViewSet, basename='document')
router.register('author', AuthorViewSet, basename='author')
router.register('classification', ClassificationViewSet, basename='classification')
router.register('serial', SerialViewSet, basename='serial')

urlpatterns = [
    path('oai', OAIView.as_view(), name='oai'),
    path('match', MatchView.as_view(), name='match'),
    path('search', SearchView.as_view(), name='search'),
    path('links', LinksView.as_view(), name='links'),
] + router.urls
