import logging

from marebito.business_logic.classifier import ModelConfig, save_model, train
from marebito.business_logic.enums import GoldSplit, ModelKind
from marebito.business_logic.evaluation import compare_models, load_gold, partition_gold, select_split
from marebito.business_logic.matcher import build_training_set
from marebito.core.management.base import MarebitoCommand

logger = logging.getLogger(__name__)

TRAINING_SPLITS = (GoldSplit.TRAIN.value, GoldSplit.ALL.value)


class Command(MarebitoCommand):
    help = 'Train a match classifier from a gold set'  # noqa: A003

    def add_arguments(self, parser):
        parser.add_argument('--corpus', help='Corpus path')
        parser.add_argument('--gold', required=True, help='Gold JSONL path')
        parser.add_argument('--output', help='Model path (defaults to the model_path setting)')
        parser.add_argument('--kind', choices=[kind.value for kind in ModelKind])
        parser.add_argument('--seed', type=int)
        parser.add_argument('--k', type=int, help='Candidates per gold item')
        parser.add_argument('--split', choices=TRAINING_SPLITS, default=GoldSplit.TRAIN.value)
        parser.add_argument(
            '--compare', action='store_true',
            help='Train both model kinds on the train split, report each on the eval split and keep the best'
        )

    def run(self, gold, output=None, kind=None, seed=None, k=None, split=None, compare=False, **options):
        corpus = self.load_corpus(options.get('corpus'))
        index = self.load_index(corpus)
        gold_items = load_gold(gold, corpus)
        output = self.get_setting('model_path', output, required=True)
        seed = self.get_setting('seed', seed)
        match_config = self.get_match_config(k=k)

        overrides = dict(self.classifier_overrides, kind=kind, seed=seed)
        if compare:
            train_items, eval_items, _ = partition_gold(gold_items, seed)
            configs = [
                ModelConfig.from_settings(dict(overrides, kind=model_kind.value))
                for model_kind in (ModelKind.FOREST, ModelKind.LINEAR)
            ]
            comparisons = compare_models(
                configs, train_items, eval_items, index, corpus, match_config, deterministic=self.deterministic
            )
            self.write_json([{
                'kind': comparison.config.kind.value,
                'report': comparison.report.to_dict(),
            } for comparison in comparisons])
            best = max(comparisons, key=lambda comparison: comparison.report.get_informedness(1, 1) or 0.0)
            model = best.model
        else:
            config = ModelConfig.from_settings(overrides)
            training_items = select_split(gold_items, GoldSplit(split), seed)
            model = train(build_training_set(training_items, index, corpus, match_config.k), config)

        save_model(model, output)
        self.write_summary(f'Saved {model.kind.value} model to {output}')
