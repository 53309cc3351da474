from marebito.business_logic.corpus import load_corpus, save_corpus
from marebito.core.management.base import MarebitoCommand


class Command(MarebitoCommand):
    help = 'Validate a JSONL corpus and write its normalized form'  # noqa: A003

    def add_arguments(self, parser):
        parser.add_argument('source', help='JSONL corpus to validate')
        parser.add_argument('--output', help='Normalized corpus path (defaults to the corpus_path setting)')

    def run(self, source, output=None, **options):
        corpus = load_corpus(source)
        output = self.get_setting('corpus_path', output, required=True)
        save_corpus(corpus, output)
        self.write_summary(f'Ingested {len(corpus)} records into {output} (generation {corpus.generation})')
