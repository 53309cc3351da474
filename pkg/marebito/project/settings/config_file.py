import os

from marebito.core.utils.collections import deep_update
from marebito.core.utils.settings import read_key_value_config, split_config_sections

CONFIG_FILE = os.getenv(f'{ENVVAR_SETTINGS_PREFIX}CONFIG_FILE') or CONFIG_FILE  # type: ignore # noqa: F821
if CONFIG_FILE:
    deep_update(globals(), split_config_sections(read_key_value_config(CONFIG_FILE)))
