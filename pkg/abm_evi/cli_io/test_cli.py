import csv
import io
import json

import numpy as np
import pytest

from ._cli import main, k_grid_type, EXIT_OK, EXIT_INVALID, EXIT_FIT, EXIT_IO
from ..distributions import DgpSpec, make_stream
from ..estimators import abm_estimate


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def content_hash(stderr):
    lines = [line for line in stderr.splitlines() if line.startswith('content hash ')]
    assert len(lines) == 1
    return lines[0].split()[-1]


@pytest.fixture
def pareto_file(tmp_path):
    x = DgpSpec.pareto(0.5).sample(2000, make_stream(8, 0))
    path = tmp_path / 'pareto.txt'
    path.write_text('# pareto(0.5)\n' + '\n'.join(format(v, '.17g') for v in x) + '\n')
    return path, x


def test_k_grid_type():
    assert k_grid_type('10:50:20') == [10, 30, 50]
    assert k_grid_type('10:55:20') == [10, 30, 50]


def test_weights(capsys):
    assert main(['weights', '--n', '4', '--m', '2']) == EXIT_OK
    out, err = capsys.readouterr()
    rows = rows_of(out)
    np.testing.assert_allclose([float(r['weight']) for r in rows], [1/2, 1/3, 1/6], rtol=1e-15)
    assert [r['index'] for r in rows] == ['1', '2', '3']
    content_hash(err)


def test_weights_json(capsys):
    assert main(['weights', '--n', '10', '--m', '3', '--format', 'json']) == EXIT_OK
    out, err = capsys.readouterr()
    content = json.loads(out)
    assert len(content['rows']) == 8
    assert content['manifest']['content_hash'] == content_hash(err)
    assert content['manifest']['n'] == 10


def test_bad_weights(capsys):
    assert main(['weights', '--n', '4', '--m', '1']) == EXIT_INVALID


def test_estimate(pareto_file, capsys):
    path, x = pareto_file
    assert main(['estimate', '--input', str(path), '--method', 'abm', '--k', '20']) == EXIT_OK
    out, err = capsys.readouterr()
    (row,) = rows_of(out)
    assert float(row['gamma_hat']) == abm_estimate(x, 100).gamma_hat
    assert row['m'] == '100'
    content_hash(err)


def test_estimate_is_repeatable(pareto_file, capsys):
    path, _ = pareto_file
    main(['estimate', '--input', str(path), '--method', 'bm', '--m', '40'])
    first = content_hash(capsys.readouterr().err)
    main(['estimate', '--input', str(path), '--method', 'bm', '--m', '40'])
    assert content_hash(capsys.readouterr().err) == first


def test_estimate_sweep(pareto_file, tmp_path, capsys):
    path, _ = pareto_file
    out = tmp_path / 'sweep.csv'
    assert main(['estimate', '--input', str(path), '--method', 'hill', '--k-grid', '10:50:10', '--out', str(out)]) == EXIT_OK
    rows = rows_of(out.read_text())
    assert [int(r['k']) for r in rows] == [10, 20, 30, 40, 50]
    assert all(r['error'] == '' for r in rows)


def test_estimate_bad_line(tmp_path, capsys):
    path = tmp_path / 'x.txt'
    path.write_text('1.0\n2.0\noops\n')
    assert main(['estimate', '--input', str(path), '--k', '1']) == EXIT_INVALID
    assert ':3:' in capsys.readouterr().err


def test_estimate_fit_failure(tmp_path, capsys):
    path = tmp_path / 'x.txt'
    path.write_text('2.0\n' * 50)
    assert main(['estimate', '--input', str(path), '--method', 'abm', '--m', '5']) == EXIT_FIT
    assert 'NoUniqueMaximizer' in capsys.readouterr().err


def test_estimate_missing_file(tmp_path):
    assert main(['estimate', '--input', str(tmp_path / 'absent.txt'), '--m', '5']) == EXIT_IO


def test_estimate_hill_needs_k(pareto_file):
    path, _ = pareto_file
    assert main(['estimate', '--input', str(path), '--method', 'hill', '--m', '5']) == EXIT_INVALID


def test_verify_variance_constant(capsys):
    for gamma in ['0.5', '1', '2']:
        assert main(['verify', '--what', 'variance-constant', '--gamma', gamma]) == EXIT_OK
        result = json.loads(capsys.readouterr().out)
        assert result['variance_constant_a'] == pytest.approx(0.393, abs=1e-3)


def test_verify_matrices(capsys):
    assert main(['verify', '--what', 'matrices', '--gamma', '1']) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result['Sigma'][1][1] == 0.5
    assert np.array(result['limit_cov']).shape == (2, 2)


def test_verify_covariance(capsys):
    assert main(['--threads', '2', 'verify', '--what', 'covariance-mc', '--reps', '20000', '--seed', '3']) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result['reps'] == 20000
    assert np.array(result['z_scores']).shape == (3, 3)


def test_simulate_is_thread_independent(tmp_path, capsys):
    config = tmp_path / 'experiment.json'
    config.write_text(json.dumps({
        'dgp': 'half-t', 'nu': 2, 'n': [200, 400], 'k': [5, 10], 'reps': 4, 'seed': 9,
    }))
    hashes = []
    for threads in ['1', '3']:
        out = tmp_path / f'run{threads}'
        assert main(['--threads', threads, 'simulate', '--config', str(config), '--out', str(out)]) == EXIT_OK
        manifest = json.loads((out / 'manifest.json').read_text())
        assert manifest['content_hash'] == content_hash(capsys.readouterr().err)
        assert manifest['config']['seed'] == 9
        hashes.append(manifest['content_hash'])
        assert len(rows_of((out / 'summary.csv').read_text())) == 8
    assert hashes[0] == hashes[1]


def test_simulate_overrides(capsys):
    assert main(['simulate', '--experiment', 'fig6b-pareto', '--reps', '2', '--seed', '5']) == EXIT_OK
    rows = rows_of(capsys.readouterr().out)
    assert len(rows) == 40
    assert {r['reps_succeeded'] for r in rows} <= {'1', '2'}


def test_simulate_unknown_experiment(capsys):
    assert main(['simulate', '--experiment', 'fig99']) == EXIT_INVALID


def test_series_feeds_estimate(tmp_path, capsys):
    dgp = tmp_path / 'dgp.json'
    dgp.write_text(json.dumps({'dgp': 'ar1', 'phi': 0.5}))
    series = tmp_path / 'series.txt'
    assert main(['simulate', '--dgp', str(dgp), '--n', '300', '--seed', '2', '--out', str(series)]) == EXIT_OK
    capsys.readouterr()
    x = DgpSpec.ar1(0.5).sample(300, make_stream(2, 0))
    assert main(['estimate', '--input', str(series), '--m', '10']) == EXIT_OK
    (row,) = rows_of(capsys.readouterr().out)
    assert float(row['gamma_hat']) == abm_estimate(x, 10).gamma_hat


def test_path(capsys):
    assert main(['path', '--dgp', 'fig3a-student-t2', '--n', '1000', '--k-grid', '10:30:10', '--methods', 'abm', 'bm']) == EXIT_OK
    rows = rows_of(capsys.readouterr().out)
    assert [(r['method'], r['k']) for r in rows] == [
        ('abm', '10'), ('abm', '20'), ('abm', '30'), ('bm', '10'), ('bm', '20'), ('bm', '30'),
    ]


def test_bad_threads():
    assert main(['--threads', '0', 'verify', '--what', 'covariance-mc', '--reps', '1000']) == EXIT_INVALID


def test_estimate_undecodable_input(tmp_path, capsys):
    path = tmp_path / 'x.txt'
    path.write_bytes(b'1.0\n2.0\n\xff\xfe\n3.0\n')
    assert main(['estimate', '--input', str(path), '--method', 'hill', '--k', '1']) == EXIT_INVALID
    assert ':3: not UTF-8' in capsys.readouterr().err
