import json
import logging
from copy import deepcopy
from typing import Any, Optional

from django.conf import settings
from django.core.management import BaseCommand, CommandError

from marebito.business_logic.classifier import Model, load_model
from marebito.business_logic.corpus import Corpus, load_corpus
from marebito.business_logic.exceptions import MarebitoError
from marebito.business_logic.index import Index
from marebito.business_logic.matcher import MatchConfig
from marebito.business_logic.state import load_index_for_corpus
from marebito.core.utils.atomic_write import write_text_atomic
from marebito.core.utils.settings import read_key_value_config, split_config_sections

EXIT_USAGE_ERROR = 1
EXIT_DATA_ERROR = 2
EXIT_INTERNAL_ERROR = 3

logger = logging.getLogger(__name__)


class MarebitoCommand(BaseCommand):
    """
    Base of the pipeline subcommands. Settings resolve as command-line flag, then `--config` file,
    then environment and settings defaults. Domain errors exit with 2, unexpected ones with 3 and
    argument errors with 1.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.domain_settings: dict[str, Any] = {}
        self.classifier_overrides: dict[str, Any] = {}
        self.oai_settings: dict[str, Any] = {}
        self.deterministic = False

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        # Raise CommandError (exit code 1) instead of letting argparse exit with 2
        parser.called_from_command_line = False
        parser.add_argument('--config', help='Key-value config file overriding settings')
        parser.add_argument(
            '--deterministic', action='store_true', help='Zero timestamps for byte-identical outputs'
        )
        return parser

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except CommandError:
            raise
        except MarebitoError as ex:
            raise CommandError(f'{ex.__class__.__name__}: {ex}', returncode=EXIT_DATA_ERROR) from ex
        except Exception as ex:
            logger.debug('Unexpected error', exc_info=True)
            raise CommandError(f'Internal error: {ex!r}', returncode=EXIT_INTERNAL_ERROR) from ex

    def handle(self, *args, **options):
        self.load_config(options.get('config'))
        self.deterministic = options.get('deterministic', False)
        return self.run(*args, **options)

    def run(self, *args, **options):
        raise NotImplementedError('Must be implemented in a child class')

    def load_config(self, config_path: Optional[str]):
        sections = split_config_sections(read_key_value_config(config_path)) if config_path else {}
        self.domain_settings = deepcopy(settings.MAREBITO) | sections.get('MAREBITO', {})
        self.classifier_overrides = sections.get('CLASSIFIER', {})
        self.oai_settings = deepcopy(settings.OAI_PMH) | sections.get('OAI_PMH', {})

    def get_setting(self, name: str, flag_value=None, required=False):
        value = self.domain_settings.get(name) if flag_value is None else flag_value
        if value is None and required:
            raise CommandError(f'Missing {name}: pass it as a flag, in --config or in settings')

        return value

    def load_corpus(self, corpus_path: Optional[str] = None) -> Corpus:
        return load_corpus(self.get_setting('corpus_path', corpus_path, required=True))

    def load_index(self, corpus: Corpus) -> Index:
        return load_index_for_corpus(corpus, self.get_setting('index_snapshot_path'))

    def load_model(self, model_path: Optional[str] = None) -> Model:
        return load_model(self.get_setting('model_path', model_path, required=True))

    def get_match_config(self, k: Optional[int] = None, min_score: Optional[float] = None) -> MatchConfig:
        return MatchConfig.from_settings(k=self.get_setting('k', k), min_score=self.get_setting('min_score', min_score))

    def write_json(self, value, output_path: Optional[str] = None):
        text = json.dumps(value, indent=2, ensure_ascii=False)
        if output_path:
            write_text_atomic(output_path, text + '\n')
        else:
            self.stdout.write(text)

    def write_summary(self, message: str):
        self.stderr.write(message, style_func=self.style.SUCCESS)
