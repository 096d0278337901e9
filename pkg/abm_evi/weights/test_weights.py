import math

import numpy as np
import pytest
import scipy.special
from hypothesis import given, settings, strategies as st

from ._binomial import abm_weights, exp_weights, weight_approximation_error
from ..errors import InvalidArgument


def log_binomial_weights(n, m):
    """p_i evaluated directly from log-gamma, only used as an oracle"""
    i = np.arange(1, n - m + 2)
    log_num = (
        scipy.special.gammaln(n - i + 1)
        - scipy.special.gammaln(m)
        - scipy.special.gammaln(n - i - m + 2)
    )
    log_den = (
        scipy.special.gammaln(n + 1)
        - scipy.special.gammaln(m + 1)
        - scipy.special.gammaln(n - m + 1)
    )
    return np.exp(log_num - log_den)


def test_four_choose_two():
    p = abm_weights(4, 2).values
    assert p[0] == 0.5
    assert p[1] == 1/3
    assert p[2] == 1/6


def test_single_block():
    np.testing.assert_array_equal(abm_weights(5, 5).values, [1.0])


def test_first_weight_is_block_fraction():
    assert abm_weights(1000, 10).values[0] == 10/1000


@pytest.mark.parametrize('n,m', [(1, 2), (10, 1), (10, 11), (10, 0)])
def test_bad_block_size(n, m):
    with pytest.raises(InvalidArgument):
        abm_weights(n, m)


def test_matches_log_gamma_oracle():
    rng = np.random.default_rng(20240601)
    for _ in range(200):
        n = int(rng.integers(2, 2001))
        m = int(rng.integers(2, n + 1))
        p = abm_weights(n, m).values
        oracle = log_binomial_weights(n, m)
        assert len(p) == n - m + 1
        assert abs(p.sum() - 1.0) < 1e-12
        checked = oracle > 1e-300
        np.testing.assert_allclose(p[checked], oracle[checked], rtol=1e-10)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=3, max_value=3000).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(min_value=2, max_value=n - 1))
))
def test_sum_and_monotone_decay(nm):
    n, m = nm
    p = abm_weights(n, m).values
    assert abs(math.fsum(p) - 1.0) < 1e-12
    positive = p[p > 0]
    assert np.all(np.diff(positive) < 0)


def test_underflow_floor_zeroes_the_tail():
    p = abm_weights(200_000, 20_000).values
    assert p[-1] == 0.0
    first_zero = np.argmax(p == 0.0)
    assert first_zero > 0
    assert np.all(p[first_zero:] == 0.0)
    assert np.all(p[:first_zero] >= 1e-300)
    assert abs(p.sum() - 1.0) < 1e-12


def test_exp_weights_direct_formula():
    np.testing.assert_allclose(exp_weights(100, 10, 1), [0.1])
    np.testing.assert_allclose(
        exp_weights(100, 10, 3),
        [0.1, 0.1*math.exp(-0.1), 0.1*math.exp(-0.2)],
        rtol=1e-15
    )
    np.testing.assert_allclose(
        exp_weights(4, 2, 3),
        [0.5, 0.5*math.exp(-0.5), 0.5*math.exp(-1.0)],
        rtol=1e-15
    )


def test_exp_weights_normalized_geometric_sum():
    q = exp_weights(100_000, 10, 99_991, normalize=True)
    assert abs(q.sum() - 1.0) < 1e-3


def test_exp_weights_count_limit():
    with pytest.raises(InvalidArgument):
        exp_weights(4, 2, 4)


def test_approximation_error_first_index_only():
    assert weight_approximation_error(4, 2, 1e-3) == 0.0


def test_approximation_error_shrinks_with_block_size():
    coarse = weight_approximation_error(10_000, 100, 1)
    fine = weight_approximation_error(1_000_000, 10_000, 1)
    assert fine < coarse
    assert fine == pytest.approx(0.02343, abs=1e-4)


def test_approximation_error_decays_along_sqrt_n():
    errors = []
    for n in [1_000, 10_000, 100_000]:
        m = round(math.sqrt(n))
        errors.append(weight_approximation_error(n, m, 1))
    assert errors[0] > errors[1] > errors[2]
