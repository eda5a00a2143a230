import io
import os
from collections import OrderedDict

import yaml

from pgaext.mul.core import SequenceError

import logging
log = logging.getLogger(__name__)

CONFIG_ENV = 'PGAEXT_MUL_CONFIG'

DEFAULTS = OrderedDict([
    ('budget', 1000000),
    ('jobs', 1),
    ('seed', 0),
    ('sample_size', 1000),
    ('indexed', 'auto'),
    ('state_bound_limit', 2 ** 24),
    ('log_level', 'WARNING'),
])

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def ordered_load(stream, Loader=yaml.SafeLoader,
                 object_pairs_hook=OrderedDict):
    class OrderedLoader(Loader):
        pass

    def construct_mapping(loader, node):
        loader.flatten_mapping(node)
        return object_pairs_hook(loader.construct_pairs(node))
    OrderedLoader.add_constructor(
        yaml.resolver.BaseResolver.DEFAULT_MAPPING_TAG,
        construct_mapping)
    return yaml.load(stream, OrderedLoader)


def config_path(path=None):
    return path or os.environ.get(CONFIG_ENV) or None


def get_config(path=None):
    """
    Effective configuration: the defaults overridden by the YAML file
    at ``path``, or at $PGAEXT_MUL_CONFIG when no path is given.
    """
    config = OrderedDict(DEFAULTS)
    path = config_path(path)
    if path is None:
        return config
    log.debug('Load configuration from %s' % path)
    try:
        with io.open(path, 'r', encoding='utf-8') as config_file:
            loaded = ordered_load(config_file)
    except (IOError, OSError) as e:
        raise ConfigError('Could not read configuration %s: %s' % (path, e))
    except yaml.YAMLError as e:
        raise ConfigError('Invalid YAML in %s: %s' % (path, e))
    if loaded is None:
        return config
    if not isinstance(loaded, dict):
        raise ConfigError('Configuration %s must be a mapping' % path)
    for key, value in loaded.items():
        if key not in DEFAULTS:
            raise ConfigError(
                "Unknown configuration key '%s' in %s (known: %s)"
                % (key, path, ', '.join(DEFAULTS))
            )
        config[key] = _check(key, value, path)
    return config


def _check(key, value, path):
    if key == 'indexed':
        if value in (True, False, 'auto'):
            return value
        raise ConfigError("'indexed' in %s must be true, false or auto"
                          % path)
    if key == 'log_level':
        level = str(value).upper()
        if level not in LOG_LEVELS:
            raise ConfigError("'log_level' in %s must be one of %s"
                              % (path, ', '.join(LOG_LEVELS)))
        return level
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError("'%s' in %s must be an integer, got %r"
                          % (key, path, value))
    if value < (0 if key == 'seed' else 1):
        raise ConfigError("'%s' in %s is out of range: %d"
                          % (key, path, value))
    return value


def indexed_flag(config):
    """ None lets the executor decide from the sequence """
    value = config['indexed']
    return None if value == 'auto' else bool(value)


class ConfigError(SequenceError):
    pass
