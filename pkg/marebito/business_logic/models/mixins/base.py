import dataclasses
import typing

from marebito.core.utils.typing import is_optional_type, unwrap_optional


class BaseMixin:
    _field_cache: typing.ClassVar = {}
    _type_hints_cache: typing.ClassVar = {}

    @classmethod
    def get_fields(cls):
        fields = cls._field_cache.get(cls)
        if fields is None:
            fields = {field.name: field for field in dataclasses.fields(cls)}
            cls._field_cache[cls] = fields
        return fields

    @classmethod
    def get_type_hints(cls):
        type_hints = cls._type_hints_cache.get(cls)
        if type_hints is None:
            type_hints = typing.get_type_hints(cls)
            cls._type_hints_cache[cls] = type_hints
        return type_hints

    @classmethod
    def get_field(cls, field_name):
        return cls.get_fields()[field_name]

    @classmethod
    def get_field_names(cls):
        return cls.get_fields().keys()

    @classmethod
    def get_field_type(cls, field_name):
        type_ = unwrap_optional(cls.get_type_hints()[field_name])
        assert typing.get_origin(type_) is not typing.Union, 'Multitype fields are not supported'

        return type_

    @classmethod
    def is_optional_field(cls, field_name):
        return is_optional_type(cls.get_type_hints()[field_name])

    @classmethod
    def is_required_field(cls, field_name):
        field = cls.get_field(field_name)
        if field.default is not dataclasses.MISSING or field.default_factory is not dataclasses.MISSING:  # type: ignore
            return False

        return not cls.is_optional_field(field_name)
