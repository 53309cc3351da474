from marebito.business_logic.enums import GoldSplit
from marebito.business_logic.evaluation import (
    DEFAULT_PENALTIES, load_gold, parse_penalties, parse_thresholds, render_sweep_csv, select_split, threshold_sweep,
    write_sweep_csv
)
from marebito.core.management.base import MarebitoCommand

DEFAULT_THRESHOLDS = '0.5:1.0:0.05'


class Command(MarebitoCommand):
    help = 'Sweep the minimum score and emit informedness per threshold and penalty pair as CSV'  # noqa: A003

    def add_arguments(self, parser):
        parser.add_argument('--corpus', help='Corpus path')
        parser.add_argument('--gold', required=True, help='Gold JSONL path')
        parser.add_argument('--model', help='Model path')
        parser.add_argument('--split', choices=[split.value for split in GoldSplit], default=GoldSplit.TEST.value)
        parser.add_argument('--seed', type=int, help='Seed of the gold partition')
        parser.add_argument('--k', type=int)
        parser.add_argument(
            '--thresholds', default=DEFAULT_THRESHOLDS, help='start:end:step (inclusive) or a comma separated list'
        )
        parser.add_argument('--penalties', nargs='+', help='Penalty pairs like 1,1 2,2 5,5')
        parser.add_argument('--output', help='CSV path (defaults to stdout)')

    def run(self, gold, split=None, seed=None, thresholds=None, penalties=None, output=None, **options):
        parsed_thresholds = parse_thresholds(thresholds)
        params_list = parse_penalties(penalties) if penalties else DEFAULT_PENALTIES
        corpus = self.load_corpus(options.get('corpus'))
        index = self.load_index(corpus)
        model = self.load_model(options.get('model'))
        k = self.get_match_config(k=options.get('k')).k
        items = select_split(load_gold(gold, corpus), GoldSplit(split), self.get_setting('seed', seed))

        curve = threshold_sweep(model, items, index, corpus, parsed_thresholds, params_list, k)
        if output:
            write_sweep_csv(curve, output)
            self.write_summary(f'Wrote {len(curve.points)} rows to {output}')
        else:
            self.stdout.write(render_sweep_csv(curve), ending='')
