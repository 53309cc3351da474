from .base import Model, accept, as_feature_array, as_feature_matrix, score  # noqa: F401
from .config import ModelConfig  # noqa: F401
from .forest import DecisionTree, ForestModel, train_forest  # noqa: F401
from .linear import LinearModel, train_linear  # noqa: F401
from .persistence import (  # noqa: F401
    MODEL_FORMAT_VERSION, deserialize_model, load_model, save_model, serialize_model
)
from .training import TrainingSet, train  # noqa: F401
