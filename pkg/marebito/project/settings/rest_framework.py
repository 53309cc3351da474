REST_FRAMEWORK = {
    'DEFAULT_SCHEMA_CLASS': 'drf_spectacular.openapi.AutoSchema',
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': ['rest_framework.permissions.AllowAny'],
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': ['rest_framework.renderers.JSONRenderer'],
    'DEFAULT_PARSER_CLASSES': ['rest_framework.parsers.JSONParser'],
    'EXCEPTION_HANDLER': 'marebito.api.exceptions.exception_handler',
}

SPECTACULAR_SETTINGS = {
    'TITLE': 'Marebito',
    'DESCRIPTION': 'Citation matching, metadata search, Scholix links and OAI-PMH',
    'VERSION': '1.0.0',
}
