from dataclasses import dataclass
from typing import Optional, Union

from marebito.business_logic.exceptions import ValidationError
from marebito.business_logic.validators import validate_gte_value, validate_type


@dataclass
class GoldItem:
    input: Union[str, dict]  # noqa: A003
    """Citation text or structured field map"""

    expected_id: Optional[int] = None
    """Correct record id, absent for real negatives"""

    @property
    def is_real_positive(self):
        return self.expected_id is not None

    @classmethod
    def deserialize_from_dict(cls, dict_):
        unknown_keys = dict_.keys() - {'input', 'expected_id'}
        if unknown_keys:
            raise ValidationError('Unknown key: {}'.format(', '.join(sorted(unknown_keys))))
        if 'input' not in dict_:
            raise ValidationError('Missing keys: input')

        item = cls(input=dict_['input'], expected_id=dict_.get('expected_id'))
        item.validate()
        return item

    def serialize_to_dict(self):
        return {'input': self.input, 'expected_id': self.expected_id}

    def validate(self):
        validate_type('Gold item input', self.input, (str, dict))
        if self.expected_id is not None:
            validate_type('Gold item expected id', self.expected_id, int)
            validate_gte_value('Gold item expected id', self.expected_id, 1)
