import logging

from daphne.cli import CommandLineInterface

from marebito.business_logic.state import ServiceState
from marebito.core.management.base import MarebitoCommand

ASGI_APPLICATION = 'marebito.project.asgi:application'

logger = logging.getLogger(__name__)


class Command(MarebitoCommand):
    help = 'Serve the HTTP API with daphne'  # noqa: A003

    def add_arguments(self, parser):
        parser.add_argument('--host')
        parser.add_argument('--port', type=int)
        parser.add_argument('--corpus', help='Corpus path')
        parser.add_argument('--model', help='Model path')
        parser.add_argument('--links', help='Links JSONL path')

    def run(self, host=None, port=None, **options):
        for name, option_name in (('corpus_path', 'corpus'), ('model_path', 'model'), ('links_path', 'links')):
            if options.get(option_name):
                self.domain_settings[name] = options[option_name]

        ServiceState.set_instance(ServiceState.load(self.domain_settings, self.oai_settings))

        host = self.get_setting('host', host)
        port = self.get_setting('port', port)
        logger.info('Serving on %s:%s', host, port)
        CommandLineInterface().run(['--bind', host, '--port', str(port), ASGI_APPLICATION])
