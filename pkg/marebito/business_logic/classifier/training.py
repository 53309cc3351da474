import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from marebito.business_logic.enums import MatchLabel, ModelKind
from marebito.business_logic.exceptions import EmptyTrainingSetError

from ..models import FeatureVector
from .base import Model, as_feature_matrix
from .config import ModelConfig
from .forest import train_forest
from .linear import train_linear

logger = logging.getLogger(__name__)

TRAINERS = {
    ModelKind.LINEAR: train_linear,
    ModelKind.FOREST: train_forest,
}


@dataclass
class TrainingSet:
    rows: list[tuple[FeatureVector, MatchLabel]] = field(default_factory=list)

    def __len__(self):
        return len(self.rows)

    def add(self, feature_vector: FeatureVector, label: MatchLabel):
        self.rows.append((feature_vector, label))

    def get_label_counts(self) -> Counter:
        return Counter(label for _, label in self.rows)

    def to_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        features = as_feature_matrix([feature_vector for feature_vector, _ in self.rows])
        labels = np.array([label == MatchLabel.MATCH for _, label in self.rows], dtype=np.int64)
        return features, labels


def train(data: TrainingSet, config: ModelConfig) -> Model:
    if not len(data):
        raise EmptyTrainingSetError('Training set is empty')

    config.validate()
    label_counts = data.get_label_counts()
    logger.info(
        'Training %s model on %s rows (%s match, %s no match)', config.kind.value, len(data),
        label_counts[MatchLabel.MATCH], label_counts[MatchLabel.NO_MATCH]
    )
    features, labels = data.to_arrays()
    return TRAINERS[config.kind](features, labels, config)
