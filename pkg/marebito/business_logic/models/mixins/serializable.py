import typing
from typing import Any, Optional

from marebito.business_logic.exceptions import ValidationError
from marebito.core.utils.misc import coerce_from_json_type, coerce_to_json_type

from .base import BaseMixin


def serialize_value(value, skip_none_values, coerce_to_json_types):
    if isinstance(value, SerializableMixin):
        return value.serialize_to_dict(skip_none_values=skip_none_values, coerce_to_json_types=coerce_to_json_types)

    if isinstance(value, (list, tuple)):
        return [serialize_value(item, skip_none_values, coerce_to_json_types) for item in value]

    if isinstance(value, dict):
        return {
            serialize_value(item_key, skip_none_values, coerce_to_json_types):
            serialize_value(item_value, skip_none_values, coerce_to_json_types)
            for item_key, item_value in value.items()
        }

    if coerce_to_json_types:
        value = coerce_to_json_type(value)

    return value


class SerializableMixin(BaseMixin):

    @staticmethod
    def deserialize_value(field_type, value, complain_excessive_keys):
        if value is None:
            return None

        origin = typing.get_origin(field_type)
        if origin and issubclass(origin, (list, tuple)):
            if not isinstance(value, list):
                raise ValidationError(f'Expected a list, got {type(value).__name__}')
            (item_type,) = typing.get_args(field_type)[:1]
            return [SerializableMixin.deserialize_value(item_type, item, complain_excessive_keys) for item in value]

        if origin and issubclass(origin, dict):
            item_key_type, item_value_type = typing.get_args(field_type)
            return {
                coerce_from_json_type(item_key, item_key_type):
                SerializableMixin.deserialize_value(item_value_type, item_value, complain_excessive_keys)
                for item_key, item_value in value.items()
            }

        if isinstance(field_type, type) and issubclass(field_type, SerializableMixin):
            if not isinstance(value, dict):
                raise ValidationError(f'Expected an object, got {type(value).__name__}')
            return field_type.deserialize_from_dict(value, complain_excessive_keys=complain_excessive_keys)

        return coerce_from_json_type(value, field_type)

    @classmethod
    def deserialize_from_dict(cls, dict_, complain_excessive_keys=True, override: Optional[dict[str, Any]] = None):
        """Return instance deserialized from `dict_`.
        Args:
            dict_ (dict): dict object to be deserialized from
            complain_excessive_keys (bool): if `True` then `ValidationError` is raise if unknown keys are met
            override (dict): a dict of values that have already been deserialized
        """
        override = override or {}
        field_names = set(cls.get_field_names())
        missing_keys = sorted(
            key for key in field_names - dict_.keys() if key not in override and cls.is_required_field(key)
        )
        if missing_keys:
            raise ValidationError('Missing keys: {}'.format(', '.join(missing_keys)))

        deserialized = {}
        for key, value in dict_.items():
            if key in override:
                continue

            if key not in field_names:
                if complain_excessive_keys:
                    raise ValidationError(f'Unknown key: {key}')
                else:
                    continue

            deserialized[key] = cls.deserialize_value(cls.get_field_type(key), value, complain_excessive_keys)

        deserialized.update(override)

        return cls(**deserialized)  # type: ignore

    def serialize_to_dict(self, skip_none_values=True, coerce_to_json_types=True, exclude=()):
        serialized = {}
        for field_name in self.get_field_names():
            if field_name in exclude:
                continue

            value = getattr(self, field_name)
            if value is None and skip_none_values:
                continue

            serialized[field_name] = serialize_value(value, skip_none_values, coerce_to_json_types)

        return serialized
