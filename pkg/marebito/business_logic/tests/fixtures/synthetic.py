import pytest

from marebito.business_logic.classifier import ModelConfig, train
from marebito.business_logic.evaluation import partition_gold
from marebito.business_logic.index import build_index
from marebito.business_logic.matcher import build_training_set
from marebito.business_logic.utils.synthetic import SynthConfig, generate_synthetic

CLEAN_SYNTH_CONFIG = SynthConfig(
    records=300,
    gold=100,
    negative_fraction=0.0,
    token_drop_p=0.0,
    author_initial_p=0.0,
    year_jitter_p=0.0,
    seed=11,
)
NOISY_SYNTH_CONFIG = SynthConfig(records=300, gold=120, negative_fraction=0.25, seed=7, links=40)
BENCHMARK_SYNTH_CONFIG = SynthConfig(
    records=1000,
    gold=200,
    negative_fraction=0.2,
    token_drop_p=0.1,
    author_initial_p=0.5,
    year_jitter_p=0.05,
    seed=7,
)
TEST_MODEL_CONFIG = ModelConfig(tree_count=15, seed=5)
SPLIT_SEED = 1


@pytest.fixture(scope='session')
def clean_dataset():
    return generate_synthetic(CLEAN_SYNTH_CONFIG)


@pytest.fixture(scope='session')
def clean_index(clean_dataset):
    return build_index(clean_dataset.corpus)


@pytest.fixture(scope='session')
def clean_model(clean_dataset, clean_index):
    training_set = build_training_set(clean_dataset.gold, clean_index, clean_dataset.corpus)
    return train(training_set, TEST_MODEL_CONFIG)


@pytest.fixture(scope='session')
def noisy_dataset():
    return generate_synthetic(NOISY_SYNTH_CONFIG)


@pytest.fixture(scope='session')
def noisy_index(noisy_dataset):
    return build_index(noisy_dataset.corpus)


@pytest.fixture(scope='session')
def noisy_split(noisy_dataset):
    return partition_gold(noisy_dataset.gold, seed=SPLIT_SEED)


@pytest.fixture(scope='session')
def noisy_model(noisy_dataset, noisy_index, noisy_split):
    train_items, _, _ = noisy_split
    training_set = build_training_set(train_items, noisy_index, noisy_dataset.corpus)
    return train(training_set, TEST_MODEL_CONFIG)


@pytest.fixture(scope='session')
def benchmark_dataset():
    return generate_synthetic(BENCHMARK_SYNTH_CONFIG)


@pytest.fixture(scope='session')
def benchmark_index(benchmark_dataset):
    return build_index(benchmark_dataset.corpus)


@pytest.fixture(scope='session')
def benchmark_split(benchmark_dataset):
    return partition_gold(benchmark_dataset.gold, seed=SPLIT_SEED)


@pytest.fixture(scope='session')
def benchmark_model(benchmark_dataset, benchmark_index, benchmark_split):
    train_items, _, _ = benchmark_split
    training_set = build_training_set(train_items, benchmark_index, benchmark_dataset.corpus)
    return train(training_set, ModelConfig(seed=5))
