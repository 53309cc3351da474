from dataclasses import dataclass
from typing import Any, Optional

from django.conf import settings

from marebito.business_logic.constants import DEFAULT_SEED
from marebito.business_logic.enums import ModelKind
from marebito.business_logic.exceptions import BadConfigError, ValidationError
from marebito.business_logic.models.base import BaseDataclass
from marebito.business_logic.validators import (
    validate_gte_value, validate_greater_than_zero, validate_in_range, validate_type
)
from marebito.core.logging import validates

from ..models import FEATURE_COUNT


@dataclass
class ModelConfig(BaseDataclass):
    kind: ModelKind = ModelKind.FOREST
    tree_count: int = 50
    max_depth: int = 8
    feature_subsample: int = 3
    """Features considered per split, ceil(sqrt(8))"""

    min_samples_split: int = 2
    seed: int = DEFAULT_SEED
    iterations: int = 2000
    """Gradient descent steps of the linear model"""

    learning_rate: float = 0.5
    l2: float = 1e-4

    @validates('model config')
    def validate(self):
        validate_type('Model kind', self.kind, ModelKind)
        validate_greater_than_zero('Tree count', self.tree_count)
        validate_greater_than_zero('Max depth', self.max_depth)
        validate_in_range('Feature subsample', self.feature_subsample, 1, FEATURE_COUNT)
        validate_gte_value('Min samples split', self.min_samples_split, 2)
        validate_type('Seed', self.seed, int)
        validate_greater_than_zero('Iterations', self.iterations)
        validate_greater_than_zero('Learning rate', self.learning_rate)
        validate_gte_value('L2 penalty', self.l2, 0)

    @classmethod
    def from_settings(cls, overrides: Optional[dict[str, Any]] = None) -> 'ModelConfig':
        """Build from the `CLASSIFIER` setting (plus the `MAREBITO` seed) with `overrides` on top."""
        values = {'seed': settings.MAREBITO.get('seed', DEFAULT_SEED)}
        values.update(settings.CLASSIFIER)
        values.update({key: value for key, value in (overrides or {}).items() if value is not None})
        try:
            config = cls.deserialize_from_dict(values)
            config.validate()
        except (ValidationError, ValueError, TypeError) as ex:
            raise BadConfigError(f'Invalid classifier configuration: {ex}') from ex

        return config
