import json

import pytest

from ._config import parse_config, parse_dgp
from ..distributions import DgpSpec
from ..errors import ConfigError
from ..simulation import get_experiment


def write(tmp_path, content):
    path = tmp_path / 'experiment.json'
    path.write_text(json.dumps(content) if not isinstance(content, str) else content)
    return path


def test_minimal_config(tmp_path):
    config = parse_config(write(tmp_path, {'dgp': 'pareto', 'gamma': 0.5, 'n': 1000}))
    assert config.reps == 100
    assert config.c == 1e-3
    assert config.dgp == DgpSpec.pareto(0.5)


def test_burn_in_default(tmp_path):
    config = parse_config(write(tmp_path, {'dgp': 'ar1', 'phi': 0.5, 'n': 2000}))
    assert config.dgp.burn_in == 100
    assert config.dgp.params['nu'] == 2.0


def test_stationarity(tmp_path):
    with pytest.raises(ConfigError, match='stationarity') as e:
        parse_config(write(tmp_path, {'dgp': 'garch', 'l0': 0.5, 'l1': 0.5, 'l2': 0.5, 'n': 1000}))
    assert e.value.field == 'stationarity'


def test_unknown_keys(tmp_path):
    with pytest.raises(ConfigError, match='colour') as e:
        parse_config(write(tmp_path, {'dgp': 'pareto', 'gamma': 0.5, 'n': 1000, 'colour': 'red'}))
    assert e.value.field == ['colour']


def test_bad_values(tmp_path):
    with pytest.raises(ConfigError) as e:
        parse_config(write(tmp_path, {'dgp': 'pareto', 'gamma': 0.5, 'n': 1000, 'reps': 0}))
    assert e.value.field == 'reps'
    with pytest.raises(ConfigError):
        parse_config(write(tmp_path, {'dgp': 'pareto', 'gamma': 0.5, 'n': 'many'}))
    with pytest.raises(ConfigError):
        parse_config(write(tmp_path, {'dgp': 'pareto', 'gamma': -1, 'n': 1000}))


def test_not_an_object(tmp_path):
    with pytest.raises(ConfigError):
        parse_config(write(tmp_path, '[1, 2]'))
    with pytest.raises(ConfigError):
        parse_config(write(tmp_path, '{"dgp": '))


def test_registry_names():
    assert parse_config('fig3a-student-t2') == get_experiment('fig3a-student-t2')
    with pytest.raises(ConfigError, match='fig3a-student-t2'):
        parse_config('no-such-experiment')


def test_parse_dgp(tmp_path):
    assert parse_dgp(write(tmp_path, {'dgp': 'ar1', 'phi': 0.5})) == DgpSpec.ar1(0.5)
    assert parse_dgp('fig8-garch-heavy') == DgpSpec.garch(0.5, 0.11, 0.88)
    with pytest.raises(ConfigError):
        parse_dgp(write(tmp_path, {'dgp': 'ar1', 'phi': 1.5}))
