import os.path

from django.conf import settings

import pytest


@pytest.mark.skipif(not os.path.isfile(settings.LOCAL_SETTINGS_PATH), reason='Local settings file is not provided')
def test_local_settings_file_applied():
    assert settings.IS_LOCAL_SETTINGS_FILE_APPLIED


@pytest.mark.skipif('MAREBITO_TEST_WITH_ENV_VARS' not in os.environ, reason='Env vars testing is not enabled')
def test_can_override_with_env_var():
    assert settings.TEST_WITH_ENV_VARS is True


def test_domain_settings_defaults():
    assert settings.MAREBITO['k'] == 20
    assert settings.MAREBITO['min_score'] == 0.5
    assert settings.MAREBITO['page_size'] == 100
    assert settings.MAREBITO['batch_cap'] == 1000
    assert settings.CLASSIFIER['kind'] == 'forest'
    assert settings.OAI_PMH['identifier_prefix'] == 'oai:zbmath.org:'


def test_schema_is_served(api_client):
    response = api_client.get('/api/schema/')
    assert response.status_code == 200
