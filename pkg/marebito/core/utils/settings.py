import logging
import os
from pathlib import Path
from typing import Union

from .misc import yaml_coerce

logger = logging.getLogger(__name__)

COMMENT_PREFIX = '#'
KEY_VALUE_SEPARATOR = '='


def get_settings_from_environment(prefix):
    prefix_len = len(prefix)
    return {key[prefix_len:]: yaml_coerce(value) for key, value in os.environ.items() if key.startswith(prefix)}


def parse_key_value_config(text: str) -> dict:
    """
    Parse flat `key = value` lines. Blank lines and `#` comments are skipped, values are coerced
    with YAML so `k = 20` gives an integer and `corpus_path = data/corpus.jsonl` a string.
    """
    from marebito.business_logic.exceptions import BadConfigError

    config = {}
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith(COMMENT_PREFIX):
            continue

        key, separator, value = line.partition(KEY_VALUE_SEPARATOR)
        key = key.strip()
        if not separator or not key:
            raise BadConfigError(f'Line {line_number}: expected "key = value"')

        value = value.strip()
        config[key] = yaml_coerce(value) if value else None

    return config


def read_key_value_config(path: Union[str, Path]) -> dict:
    from marebito.business_logic.exceptions import BadConfigError

    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as ex:
        raise BadConfigError(f'Could not read config file {path}: {ex}') from ex

    config = parse_key_value_config(text)
    logger.debug('Read %s config keys from %s', len(config), path)
    return config


CONFIG_SECTIONS = {
    'classifier': 'CLASSIFIER',
    'oai': 'OAI_PMH',
}
DEFAULT_CONFIG_SECTION = 'MAREBITO'


def split_config_sections(config: dict) -> dict[str, dict]:
    """
    Route flat config keys to settings dicts: `classifier.tree_count` goes to `CLASSIFIER`,
    `oai.base_url` to `OAI_PMH`, undotted keys like `corpus_path` to `MAREBITO`.
    """
    from marebito.business_logic.exceptions import BadConfigError

    sections: dict[str, dict] = {}
    for key, value in config.items():
        section_name, dot, name = key.partition('.')
        if dot:
            setting_name = CONFIG_SECTIONS.get(section_name)
            if setting_name is None or not name:
                raise BadConfigError(f'Unknown config key: {key}')
        else:
            setting_name, name = DEFAULT_CONFIG_SECTION, key

        sections.setdefault(setting_name, {})[name] = value

    return sections
