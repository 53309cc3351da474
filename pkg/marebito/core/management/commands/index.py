from marebito.business_logic.index import build_index, save_index_snapshot
from marebito.business_logic.storages.file_system import COMPRESSION_FUNCTIONS
from marebito.core.management.base import MarebitoCommand


class Command(MarebitoCommand):
    help = 'Build the candidate index of a corpus and save a snapshot'  # noqa: A003

    def add_arguments(self, parser):
        parser.add_argument('--corpus', help='Corpus path')
        parser.add_argument('--output', help='Snapshot path (defaults to the index_snapshot_path setting)')
        parser.add_argument(
            '--compress', action='append', choices=tuple(COMPRESSION_FUNCTIONS), default=[],
            help='Try this compression and keep the smallest variant (may be repeated)'
        )

    def run(self, corpus=None, output=None, compress=(), **options):
        corpus = self.load_corpus(corpus)
        output = self.get_setting('index_snapshot_path', output, required=True)
        index = build_index(corpus)
        written_path = save_index_snapshot(index, output, compressors=tuple(compress))
        self.write_summary(f'Indexed {index.doc_count} records into {written_path}')
