import logging

import numpy as np

from marebito.business_logic.enums import ModelKind
from marebito.business_logic.exceptions import ModelFormatError, SingleClassDataError
from marebito.core.logging import timeit

from ..models import FEATURE_COUNT
from .base import Model
from .config import ModelConfig

# exp() overflows float64 beyond ~709
LOGIT_CLIP = 500.0

logger = logging.getLogger(__name__)


def logistic(z):
    return 1.0 / (1.0 + np.exp(-np.clip(z, -LOGIT_CLIP, LOGIT_CLIP)))


class LinearModel(Model):
    """Logistic regression: score = logistic(w . x + b)."""

    kind = ModelKind.LINEAR

    def __init__(self, weights, bias: float = 0.0):
        weights = np.asarray(weights, dtype=float)
        if weights.shape != (FEATURE_COUNT,):
            raise ModelFormatError(f'Linear model needs {FEATURE_COUNT} weights, got {weights.size}')

        self.weights = weights
        self.bias = float(bias)

    def __repr__(self):
        return f'{self.__class__.__name__}(weights={self.weights.tolist()!r}, bias={self.bias!r})'

    def score_array(self, array: np.ndarray) -> float:
        return float(logistic(np.dot(self.weights, array) + self.bias))

    def score_matrix(self, matrix: np.ndarray) -> np.ndarray:
        return logistic(matrix @ self.weights + self.bias)

    def get_parameters(self) -> dict:
        return {'weights': [float(weight) for weight in self.weights], 'bias': self.bias}

    @classmethod
    def from_parameters(cls, parameters: dict) -> 'LinearModel':
        try:
            return cls(weights=parameters['weights'], bias=parameters['bias'])
        except (KeyError, TypeError, ValueError) as ex:
            raise ModelFormatError(f'Invalid linear model parameters: {ex!r}') from ex


@timeit(logger=logger)
def train_linear(features: np.ndarray, labels: np.ndarray, config: ModelConfig) -> LinearModel:
    """
    Full-batch gradient descent on the mean logistic loss with an L2 penalty on the weights,
    starting from zero for a fixed number of iterations. Deterministic without any seed.
    """
    if labels.min() == labels.max():
        raise SingleClassDataError('Linear model needs both match and no-match rows')

    row_count = len(labels)
    weights = np.zeros(FEATURE_COUNT)
    bias = 0.0
    for _ in range(config.iterations):
        errors = logistic(features @ weights + bias) - labels
        weights -= config.learning_rate * (features.T @ errors / row_count + config.l2 * weights)
        bias -= config.learning_rate * errors.mean()

    logger.debug('Linear model trained on %s rows: weights=%s bias=%s', row_count, weights, bias)
    return LinearModel(weights=weights, bias=bias)
