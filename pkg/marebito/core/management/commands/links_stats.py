from marebito.business_logic.links import link_stats, load_links
from marebito.core.management.base import MarebitoCommand


class Command(MarebitoCommand):
    help = 'Print MSC and publication year histograms of the linked corpus records'  # noqa: A003

    def add_arguments(self, parser):
        parser.add_argument('--corpus', help='Corpus path')
        parser.add_argument('--links', help='Links JSONL path (defaults to the links_path setting)')
        parser.add_argument('--output', help='JSON path (defaults to stdout)')

    def run(self, links=None, output=None, **options):
        corpus = self.load_corpus(options.get('corpus'))
        link_set = load_links(self.get_setting('links_path', links, required=True), corpus)
        stats = link_stats(link_set, corpus).to_dict()
        stats['link_count'] = len(link_set)
        stats['reject_count'] = len(link_set.rejects)
        self.write_json(stats, output)
