"""experiment files and named experiments"""

import json
import logging
from pathlib import Path


from ..distributions import DgpSpec
from ..errors import ConfigError, InvalidArgument
from ..simulation import ExperimentConfig, experiment_registry


log = logging.getLogger(__name__)


def _load_json(path):
    try:
        content = json.loads(Path(path).read_text(encoding='utf-8'))
    except json.JSONDecodeError as e:
        raise ConfigError(f'{path} is not valid JSON: {e}') from None
    except UnicodeDecodeError:
        raise ConfigError(f'{path} is not UTF-8 text') from None
    if not isinstance(content, dict):
        raise ConfigError(f'{path} must hold a JSON object, got {type(content).__name__}')
    return content


def parse_config(source) -> ExperimentConfig:
    """experiment from a JSON file or from the name of a registered experiment

    A path to an existing file wins over a registered name.

    Raises
    ------
    ConfigError
        unknown keys (listed), invalid values (field named), or a source
        that is neither a file nor a registered name
    OSError
        if an existing file cannot be read
    """
    path = Path(source)
    if path.is_file():
        content = _load_json(path)
        try:
            config = ExperimentConfig.from_dict(content)
        except ConfigError:
            raise
        except (TypeError, ValueError) as e:
            raise ConfigError(f'{path}: {e}') from None
        log.info('read experiment from %s', path)
        return config
    registry = experiment_registry()
    if str(source) in registry:
        return registry[str(source)]
    raise ConfigError(
        f'{source} is neither a file nor one of the named experiments ({list(registry)})'
    )


def parse_dgp(source) -> DgpSpec:
    """data generating process from a JSON file or a registered experiment's name

    The file uses the flat experiment schema; only 'dgp', 'burn_in' and the
    family parameters are read.
    """
    path = Path(source)
    if path.is_file():
        content = _load_json(path)
        try:
            return DgpSpec.from_dict(content)
        except InvalidArgument as e:
            raise ConfigError(str(e), field='dgp') from None
        except TypeError as e:
            raise ConfigError(f'{path}: {e}', field='dgp') from None
    return parse_config(source).dgp
