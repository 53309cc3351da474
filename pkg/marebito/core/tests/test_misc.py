from datetime import date, datetime, timezone

from marebito.business_logic.enums import ModelKind
from marebito.core.utils.misc import (
    DETERMINISTIC_TIMESTAMP, coerce_from_json_type, coerce_to_json_type, humanize_camel_case, utcnow_iso, yaml_coerce
)


def test_humanize_camel_case():
    assert humanize_camel_case('ThisIsACamelCase') == 'This is a camel case'


def test_yaml_coerce():
    assert yaml_coerce('20') == 20
    assert yaml_coerce('0.75') == 0.75
    assert yaml_coerce('true') is True
    assert yaml_coerce('data/corpus.jsonl') == 'data/corpus.jsonl'
    assert yaml_coerce(5) == 5


def test_coerce_json_types():
    timestamp = datetime(2024, 1, 1, 12, 30, tzinfo=timezone.utc)
    assert coerce_to_json_type(timestamp) == '2024-01-01T12:30:00Z'
    assert coerce_from_json_type('2024-01-01T12:30:00Z', datetime) == timestamp
    assert coerce_to_json_type(date(2021, 5, 1)) == '2021-05-01'
    assert coerce_from_json_type('2021-05-01', date) == date(2021, 5, 1)
    assert coerce_to_json_type(ModelKind.FOREST) == 'forest'
    assert coerce_from_json_type('linear', ModelKind) == ModelKind.LINEAR


def test_utcnow_iso_is_fixed_when_deterministic():
    assert utcnow_iso(deterministic=True) == DETERMINISTIC_TIMESTAMP
    assert utcnow_iso().endswith('Z')
