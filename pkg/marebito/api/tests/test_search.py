import pytest


def get_result_ids(response):
    return [record['id'] for record in response.json()['results']]


@pytest.mark.parametrize(
    'params, expected_ids', (
        ({'q': 'ti:elliptic'}, [2, 6]),
        ({'q': 'au:jones & !py:2005'}, [2]),
        ({'q': 'cc:33 | au:müller'}, [2, 3, 4]),
        ({'ti': 'elliptic', 'py': '1999'}, [2]),
        ({'so': 'Math. Ann.'}, [2, 5]),
        ({'an': '4'}, [4]),
        ({'q': 'ti:galois'}, []),
    )
)
def test_search(forced_service_state, api_client, params, expected_ids):
    response = api_client.get('/search', params)

    assert response.status_code == 200
    data = response.json()
    assert data['count'] == len(expected_ids)
    assert get_result_ids(response) == expected_ids


def test_structured_search_equals_query_search(forced_service_state, api_client):
    structured = api_client.get('/search', {'ti': 'elliptic', 'au': 'smith', 'py': '1990-2000'})
    query = api_client.get('/search', {'q': 'au:smith & ti:elliptic & py:1990-2000'})

    assert structured.status_code == query.status_code == 200
    assert structured.json() == query.json()


def test_search_pagination(forced_service_state, api_client):
    response = api_client.get('/search', {'q': '!an:99', 'page': 2, 'page_size': 4})

    assert response.status_code == 200
    data = response.json()
    assert data['count'] == 6
    assert data['page'] == 2
    assert data['page_size'] == 4
    assert get_result_ids(response) == [5, 6]


@pytest.mark.parametrize('params', ({'page': 0}, {'page_size': 0}, {'page_size': 101}, {'page': 'first'}))
def test_search_bad_page_params(forced_service_state, api_client, params):
    response = api_client.get('/search', dict(params, q='ti:elliptic'))
    assert response.status_code == 400


@pytest.mark.parametrize(
    'params, offset', (
        ({'q': 'ti:elliptic & py:19x9'}, 14),
        ({'q': 'ti:Körper & xx:b'}, 13),
        ({'q': ''}, 0),
        ({'q': 'ti:elliptic', 'py': '1999'}, 0),
        ({'xx': 'b'}, 0),
        ({}, 0),
    )
)
def test_search_errors(forced_service_state, api_client, params, offset):
    response = api_client.get('/search', params)

    assert response.status_code == 400
    assert response.json()['offset'] == offset
