import json
import logging
from pathlib import Path
from typing import Union

from marebito.business_logic.enums import ModelKind
from marebito.business_logic.exceptions import (
    DataIOError, FeatureOrderMismatchError, ModelFormatError, VersionMismatchError
)
from marebito.core.utils.atomic_write import write_text_atomic

from ..models import FEATURE_NAMES
from .base import Model
from .forest import ForestModel
from .linear import LinearModel

MODEL_FORMAT_VERSION = '1'
MODEL_CLASSES = {
    ModelKind.LINEAR: LinearModel,
    ModelKind.FOREST: ForestModel,
}

logger = logging.getLogger(__name__)


def serialize_model(model: Model) -> dict:
    return {
        'version': MODEL_FORMAT_VERSION,
        'kind': model.kind.value,
        'feature_names': list(model.feature_names),
        'parameters': model.get_parameters(),
    }


def deserialize_model(dict_) -> Model:
    if not isinstance(dict_, dict):
        raise ModelFormatError('Model file must contain a JSON object')

    missing_keys = {'version', 'kind', 'feature_names', 'parameters'} - dict_.keys()
    if missing_keys:
        raise ModelFormatError('Missing keys: {}'.format(', '.join(sorted(missing_keys))))

    version = dict_['version']
    if version != MODEL_FORMAT_VERSION:
        raise VersionMismatchError(f'Unsupported model format version: {version!r}')

    feature_names = dict_['feature_names']
    if not isinstance(feature_names, list) or tuple(feature_names) != FEATURE_NAMES:
        raise FeatureOrderMismatchError(
            'Model feature names {!r} do not match {!r}'.format(feature_names, list(FEATURE_NAMES))
        )

    try:
        kind = ModelKind(dict_['kind'])
    except ValueError as ex:
        raise ModelFormatError(f'Unknown model kind: {dict_["kind"]!r}') from ex

    parameters = dict_['parameters']
    if not isinstance(parameters, dict):
        raise ModelFormatError('Model parameters must be an object')

    return MODEL_CLASSES[kind].from_parameters(parameters)


def save_model(model: Model, path: Union[str, Path]):
    write_text_atomic(path, json.dumps(serialize_model(model), indent=1))
    logger.info('Saved %s model to %s', model.kind.value, path)


def load_model(path: Union[str, Path]) -> Model:
    try:
        with open(path, encoding='utf-8') as fo:
            text = fo.read()
    except OSError as ex:
        raise DataIOError(f'Could not read model {path}: {ex}') from ex
    except UnicodeDecodeError as ex:
        raise ModelFormatError(f'Model file {path} is not valid UTF-8: {ex}') from ex

    try:
        dict_ = json.loads(text)
    except json.JSONDecodeError as ex:
        raise ModelFormatError(f'Malformed model file {path}: {ex}') from ex

    model = deserialize_model(dict_)
    logger.info('Loaded %s model from %s', model.kind.value, path)
    return model
