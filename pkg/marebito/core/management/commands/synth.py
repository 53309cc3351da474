from django.core.management import CommandError

from marebito.business_logic.utils.synthetic import SynthConfig, generate_synthetic, write_synthetic
from marebito.core.management.base import MarebitoCommand

DEFAULTS = SynthConfig()


class Command(MarebitoCommand):
    help = 'Generate a synthetic corpus, a gold set of noisy citations and optionally links'  # noqa: A003

    def add_arguments(self, parser):
        parser.add_argument('--records', type=int, default=DEFAULTS.records)
        parser.add_argument('--gold', type=int, default=DEFAULTS.gold, help='Gold item count')
        parser.add_argument('--negative-fraction', type=float, default=DEFAULTS.negative_fraction)
        parser.add_argument('--token-drop-p', type=float, default=DEFAULTS.token_drop_p)
        parser.add_argument('--author-initial-p', type=float, default=DEFAULTS.author_initial_p)
        parser.add_argument('--year-jitter-p', type=float, default=DEFAULTS.year_jitter_p)
        parser.add_argument('--seed', type=int)
        parser.add_argument('--links', type=int, default=0, help='Number of DLMF-style links to generate')
        parser.add_argument('--corpus-output', help='Corpus path (defaults to the corpus_path setting)')
        parser.add_argument('--gold-output', required=True, help='Gold JSONL path')
        parser.add_argument('--links-output', help='Links JSONL path (defaults to the links_path setting)')

    def run(self, corpus_output=None, gold_output=None, links_output=None, **options):
        config = SynthConfig(
            records=options['records'],
            gold=options['gold'],
            negative_fraction=options['negative_fraction'],
            token_drop_p=options['token_drop_p'],
            author_initial_p=options['author_initial_p'],
            year_jitter_p=options['year_jitter_p'],
            seed=self.get_setting('seed', options['seed']),
            links=options['links'],
        )
        corpus_output = self.get_setting('corpus_path', corpus_output, required=True)
        links_output = self.get_setting('links_path', links_output) if config.links else None
        if config.links and not links_output:
            raise CommandError('Pass --links-output to write generated links')

        dataset = generate_synthetic(config)
        write_synthetic(dataset, corpus_output, gold_output, links_output)
        self.write_summary(
            f'Wrote {len(dataset.corpus)} records to {corpus_output}, {len(dataset.gold)} gold items to {gold_output}' +
            (f', {len(dataset.links)} links to {links_output}' if links_output else '')
        )
