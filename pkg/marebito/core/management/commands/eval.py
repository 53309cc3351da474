from marebito.business_logic.enums import GoldSplit
from marebito.business_logic.evaluation import DEFAULT_PENALTIES, evaluate, load_gold, parse_penalties, select_split
from marebito.core.management.base import MarebitoCommand


class Command(MarebitoCommand):
    help = 'Evaluate a model on a gold set: confusion counts and penalized informedness'  # noqa: A003

    def add_arguments(self, parser):
        parser.add_argument('--corpus', help='Corpus path')
        parser.add_argument('--gold', required=True, help='Gold JSONL path')
        parser.add_argument('--model', help='Model path')
        parser.add_argument('--split', choices=[split.value for split in GoldSplit], default=GoldSplit.ALL.value)
        parser.add_argument('--seed', type=int, help='Seed of the gold partition')
        parser.add_argument('--k', type=int)
        parser.add_argument('--min-score', type=float)
        parser.add_argument('--penalties', nargs='+', help='Penalty pairs like 1,1 2,2')
        parser.add_argument('--output', help='Report JSON path (defaults to stdout)')

    def run(self, gold, split=None, seed=None, penalties=None, output=None, **options):
        corpus = self.load_corpus(options.get('corpus'))
        index = self.load_index(corpus)
        model = self.load_model(options.get('model'))
        config = self.get_match_config(k=options.get('k'), min_score=options.get('min_score'))
        items = select_split(load_gold(gold, corpus), GoldSplit(split), self.get_setting('seed', seed))

        report = evaluate(
            model,
            items,
            index,
            corpus,
            config,
            parse_penalties(penalties) if penalties else DEFAULT_PENALTIES,
            split=split,
            deterministic=self.deterministic,
        )
        self.write_json(report.to_dict(), output)
