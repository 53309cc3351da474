EINSTEIN_CITATION = 'A. Einstein, Zur Elektrodynamik bewegter Körper, Ann. Phys. 17 (1905), 891-921.'


def test_match_citations(forced_service_state, api_client):
    response = api_client.post(
        '/match', {'citations': [EINSTEIN_CITATION, 'Completely unrelated words']}, format='json'
    )

    assert response.status_code == 200
    first, second = response.json()
    assert first['query_raw'] == EINSTEIN_CITATION
    assert first['matched_id'] == 1
    assert first['ranked'][0]['record_id'] == 1
    assert second['matched_id'] is None


def test_match_structured_citation(forced_service_state, api_client):
    response = api_client.post(
        '/match', {'citations': [{'title': 'On the theory of elliptic integrals', 'year': 1999}]}, format='json'
    )

    assert response.status_code == 200
    assert response.json()[0]['matched_id'] == 2


def test_match_reports_item_errors(forced_service_state, api_client):
    response = api_client.post('/match', {'citations': ['   ', EINSTEIN_CITATION]}, format='json')

    assert response.status_code == 200
    first, second = response.json()
    assert first['error'] == 'EmptyInput'
    assert first['matched_id'] is None
    assert second['error'] is None
    assert second['matched_id'] == 1


def test_match_min_score(forced_service_state, api_client):
    response = api_client.post('/match', {'citations': [EINSTEIN_CITATION], 'min_score': 1}, format='json')

    assert response.status_code == 200
    result = response.json()[0]
    assert result['matched_id'] is None
    assert 0.5 < result['score'] < 1


def test_match_rejects_bad_min_score(forced_service_state, api_client):
    response = api_client.post('/match', {'citations': [EINSTEIN_CITATION], 'min_score': 1.5}, format='json')
    assert response.status_code == 400


def test_match_empty_batch(forced_service_state_without_model, api_client):
    response = api_client.post('/match', {'citations': []}, format='json')

    assert response.status_code == 200
    assert response.json() == []


def test_match_without_model(forced_service_state_without_model, api_client):
    response = api_client.post('/match', {'citations': [EINSTEIN_CITATION]}, format='json')

    assert response.status_code == 503
    assert response.json()['detail'] == 'No classifier model is loaded.'


def test_match_batch_cap(forced_service_state, api_client, settings):
    settings.MAREBITO = dict(settings.MAREBITO, batch_cap=2)

    response = api_client.post('/match', {'citations': [EINSTEIN_CITATION] * 3}, format='json')

    assert response.status_code == 413
    assert response.json()['detail'] == 'At most 2 citations per request, got 3.'
