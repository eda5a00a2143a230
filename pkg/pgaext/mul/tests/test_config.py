import io

import pytest

from pgaext.mul.config import (
    CONFIG_ENV, DEFAULTS, get_config, indexed_flag, ordered_load,
    ConfigError,
)


def write(tmp_path, text):
    path = tmp_path / 'mul.yaml'
    path.write_text(text)
    return str(path)


def test_defaults(monkeypatch):
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    config = get_config()
    assert config == DEFAULTS
    assert config['budget'] == 1000000
    assert config['state_bound_limit'] == 2 ** 24
    assert indexed_flag(config) is None


def test_file_overrides_defaults(tmp_path):
    config = get_config(write(tmp_path, u'seed: 9\nindexed: false\n'
                                        u'log_level: debug\n'))
    assert config['seed'] == 9
    assert config['log_level'] == 'DEBUG'
    assert config['jobs'] == DEFAULTS['jobs']
    assert indexed_flag(config) is False


def test_environment_variable(tmp_path, monkeypatch):
    monkeypatch.setenv(CONFIG_ENV, write(tmp_path, u'jobs: 3\n'))
    assert get_config()['jobs'] == 3


def test_empty_file(tmp_path):
    assert get_config(write(tmp_path, u'')) == DEFAULTS


@pytest.mark.parametrize('text', [
    u'budjet: 10\n',
    u'budget: 0\n',
    u'budget: many\n',
    u'jobs: true\n',
    u'seed: -1\n',
    u'indexed: sometimes\n',
    u'log_level: LOUD\n',
    u'- budget\n',
    u'budget: [1\n',
])
def test_rejected(tmp_path, text):
    with pytest.raises(ConfigError):
        get_config(write(tmp_path, text))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        get_config(str(tmp_path / 'absent.yaml'))


def test_ordered_load_keeps_key_order():
    loaded = ordered_load(io.StringIO(u'seed: 1\nbudget: 2\njobs: 3\n'))
    assert list(loaded) == ['seed', 'budget', 'jobs']
