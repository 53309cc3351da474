import logging
from typing import Union

import numpy as np

from marebito.business_logic.enums import ModelKind
from marebito.business_logic.exceptions import DimensionMismatchError

from ..models import FEATURE_COUNT, FEATURE_NAMES, FeatureVector

logger = logging.getLogger(__name__)


def as_feature_array(feature_vector: Union[FeatureVector, np.ndarray, list, tuple]) -> np.ndarray:
    values = feature_vector.values if isinstance(feature_vector, FeatureVector) else feature_vector
    array = np.asarray(values, dtype=float)
    if array.shape != (FEATURE_COUNT,):
        raise DimensionMismatchError(FEATURE_COUNT, array.size)

    return array


def as_feature_matrix(feature_vectors) -> np.ndarray:
    rows = [as_feature_array(feature_vector) for feature_vector in feature_vectors]
    return np.vstack(rows) if rows else np.empty((0, FEATURE_COUNT))


class Model:
    """Trained binary classifier mapping a feature vector to a match score in [0, 1]. Immutable."""

    kind: ModelKind
    feature_names = FEATURE_NAMES

    def score(self, feature_vector) -> float:
        return float(self.score_array(as_feature_array(feature_vector)))

    def score_array(self, array: np.ndarray) -> float:
        raise NotImplementedError('Must be implemented in a child class')

    def get_parameters(self) -> dict:
        raise NotImplementedError('Must be implemented in a child class')

    @classmethod
    def from_parameters(cls, parameters: dict) -> 'Model':
        raise NotImplementedError('Must be implemented in a child class')

    @property
    def is_degenerate(self):
        return False

    def __eq__(self, other):
        if not isinstance(other, Model) or self.kind != other.kind:
            return NotImplemented

        return self.get_parameters() == other.get_parameters()


def score(model: Model, feature_vector) -> float:
    return model.score(feature_vector)


def accept(score_: float, min_score: float) -> bool:
    return score_ >= min_score
