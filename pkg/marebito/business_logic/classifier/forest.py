import logging
from typing import Optional

import numpy as np

from marebito.business_logic.enums import ModelKind
from marebito.business_logic.exceptions import ModelFormatError
from marebito.core.logging import timeit

from ..models import FEATURE_COUNT
from .base import Model
from .config import ModelConfig

LEAF = -1

logger = logging.getLogger(__name__)


class DecisionTree:
    """
    Axis-aligned binary tree stored as flat node arrays. Node 0 is the root; a node with
    feature `LEAF` carries the match probability in `value`, otherwise rows with
    `x[feature] <= threshold` go to `left`.
    """

    def __init__(self, feature, threshold, left, right, value):
        self.feature = [int(item) for item in feature]
        self.threshold = [float(item) for item in threshold]
        self.left = [int(item) for item in left]
        self.right = [int(item) for item in right]
        self.value = [float(item) for item in value]

        node_count = len(self.feature)
        arrays = (self.threshold, self.left, self.right, self.value)
        if not node_count or any(len(array) != node_count for array in arrays):
            raise ModelFormatError('Decision tree node arrays must be non-empty and of equal length')

    @classmethod
    def make_leaf(cls, probability: float) -> 'DecisionTree':
        return cls(feature=[LEAF], threshold=[0.0], left=[LEAF], right=[LEAF], value=[probability])

    @property
    def node_count(self):
        return len(self.feature)

    def get_depth(self, node=0) -> int:
        if self.feature[node] == LEAF:
            return 0

        return 1 + max(self.get_depth(self.left[node]), self.get_depth(self.right[node]))

    def predict(self, array) -> float:
        node = 0
        feature = self.feature
        while feature[node] != LEAF:
            node = self.left[node] if array[feature[node]] <= self.threshold[node] else self.right[node]

        return self.value[node]

    def serialize_to_dict(self) -> dict:
        return {
            'feature': self.feature,
            'threshold': self.threshold,
            'left': self.left,
            'right': self.right,
            'value': self.value,
        }

    @classmethod
    def deserialize_from_dict(cls, dict_) -> 'DecisionTree':
        try:
            return cls(**{key: dict_[key] for key in ('feature', 'threshold', 'left', 'right', 'value')})
        except (KeyError, TypeError, ValueError) as ex:
            raise ModelFormatError(f'Invalid decision tree: {ex!r}') from ex


class ForestModel(Model):
    """Bagged decision trees; the score is the mean of the trees' leaf probabilities."""

    kind = ModelKind.FOREST

    def __init__(self, trees: list[DecisionTree], config: Optional[ModelConfig] = None, is_degenerate=False):
        if not trees:
            raise ModelFormatError('Forest must contain at least one tree')

        self.trees = trees
        self.config = config or ModelConfig()
        self._is_degenerate = is_degenerate

    def __repr__(self):
        return f'{self.__class__.__name__}(trees={len(self.trees)}, is_degenerate={self._is_degenerate})'

    @property
    def is_degenerate(self):
        """Trained on single-class data: a constant model emitting that class's probability."""
        return self._is_degenerate

    def score_array(self, array: np.ndarray) -> float:
        return sum(tree.predict(array) for tree in self.trees) / len(self.trees)

    def score_matrix(self, matrix: np.ndarray) -> np.ndarray:
        return np.array([self.score_array(row) for row in matrix])

    def get_parameters(self) -> dict:
        config = self.config
        return {
            'tree_count': len(self.trees),
            'max_depth': config.max_depth,
            'feature_subsample': config.feature_subsample,
            'min_samples_split': config.min_samples_split,
            'seed': config.seed,
            'is_degenerate': self._is_degenerate,
            'trees': [tree.serialize_to_dict() for tree in self.trees],
        }

    @classmethod
    def from_parameters(cls, parameters: dict) -> 'ForestModel':
        try:
            config = ModelConfig(
                kind=ModelKind.FOREST,
                tree_count=parameters['tree_count'],
                max_depth=parameters['max_depth'],
                feature_subsample=parameters['feature_subsample'],
                min_samples_split=parameters['min_samples_split'],
                seed=parameters['seed'],
            )
            trees = [DecisionTree.deserialize_from_dict(tree) for tree in parameters['trees']]
            is_degenerate = bool(parameters.get('is_degenerate', False))
        except (KeyError, TypeError) as ex:
            raise ModelFormatError(f'Invalid forest parameters: {ex!r}') from ex

        if len(trees) != config.tree_count:
            raise ModelFormatError(f'Forest declares {config.tree_count} trees but contains {len(trees)}')

        return cls(trees=trees, config=config, is_degenerate=is_degenerate)


def gini_impurity(positive_count, total_count):
    share = positive_count / total_count
    return 2 * share * (1 - share)


def find_best_split(values: np.ndarray, labels: np.ndarray) -> Optional[tuple[float, float]]:
    """
    Return `(weighted child impurity, threshold)` of the best split of one feature, or `None`
    when all values are equal. Thresholds are midpoints between neighbouring distinct values.
    """
    order = np.argsort(values, kind='stable')
    sorted_values = values[order]
    sorted_labels = labels[order]

    is_boundary = sorted_values[1:] > sorted_values[:-1]
    if not is_boundary.any():
        return None

    row_count = len(sorted_labels)
    left_counts = np.arange(1, row_count)
    right_counts = row_count - left_counts
    left_positives = np.cumsum(sorted_labels)[:-1]
    right_positives = sorted_labels.sum() - left_positives

    impurity = (
        left_counts * gini_impurity(left_positives, left_counts) +
        right_counts * gini_impurity(right_positives, right_counts)
    ) / row_count
    impurity = np.where(is_boundary, impurity, np.inf)
    position = int(np.argmin(impurity))

    lower, upper = sorted_values[position], sorted_values[position + 1]
    threshold = (lower + upper) / 2
    if threshold >= upper:  # neighbouring floats
        threshold = lower

    return float(impurity[position]), float(threshold)


class TreeBuilder:

    def __init__(self, config: ModelConfig, rng: np.random.Generator):
        self.config = config
        self.rng = rng
        self.feature: list[int] = []
        self.threshold: list[float] = []
        self.left: list[int] = []
        self.right: list[int] = []
        self.value: list[float] = []

    def build(self, features: np.ndarray, labels: np.ndarray) -> DecisionTree:
        self._grow(features, labels, depth=0)
        return DecisionTree(self.feature, self.threshold, self.left, self.right, self.value)

    def _add_node(self, probability: float) -> int:
        self.feature.append(LEAF)
        self.threshold.append(0.0)
        self.left.append(LEAF)
        self.right.append(LEAF)
        self.value.append(probability)
        return len(self.feature) - 1

    def _choose_split(self, features: np.ndarray, labels: np.ndarray) -> Optional[tuple[int, float]]:
        best = None
        inspected = 0
        for feature_index in self.rng.permutation(FEATURE_COUNT):
            # Keep drawing features past the subsample size only until some valid split is found
            if inspected >= self.config.feature_subsample and best is not None:
                break

            inspected += 1
            split = find_best_split(features[:, feature_index], labels)
            if split is not None and (best is None or split[0] < best[0]):
                best = (split[0], int(feature_index), split[1])

        return None if best is None else best[1:]

    def _grow(self, features: np.ndarray, labels: np.ndarray, depth: int) -> int:
        positive_count = int(labels.sum())
        node = self._add_node(positive_count / len(labels))

        is_pure = positive_count in (0, len(labels))
        if is_pure or depth >= self.config.max_depth or len(labels) < self.config.min_samples_split:
            return node

        split = self._choose_split(features, labels)
        if split is None:
            return node

        feature_index, threshold = split
        goes_left = features[:, feature_index] <= threshold
        self.feature[node] = feature_index
        self.threshold[node] = threshold
        self.left[node] = self._grow(features[goes_left], labels[goes_left], depth + 1)
        self.right[node] = self._grow(features[~goes_left], labels[~goes_left], depth + 1)
        return node


@timeit(logger=logger)
def train_forest(features: np.ndarray, labels: np.ndarray, config: ModelConfig) -> ForestModel:
    """
    Grow `config.tree_count` trees, each on a bootstrap sample of the rows, choosing splits by
    Gini impurity among `config.feature_subsample` randomly drawn features. Single-class data
    gives a degenerate constant model.
    """
    row_count = len(labels)
    positive_count = int(labels.sum())
    if positive_count in (0, row_count):
        probability = 1.0 if positive_count else 0.0
        logger.warning('Training data has a single class, the forest is a constant %s', probability)
        return ForestModel(trees=[DecisionTree.make_leaf(probability)], config=config, is_degenerate=True)

    rng = np.random.default_rng(config.seed)
    trees = []
    for _ in range(config.tree_count):
        sample = rng.integers(0, row_count, size=row_count)
        trees.append(TreeBuilder(config, rng).build(features[sample], labels[sample]))

    logger.debug(
        'Forest trained on %s rows: %s trees, %s nodes total', row_count, len(trees),
        sum(tree.node_count for tree in trees)
    )
    return ForestModel(trees=trees, config=config)
