import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ._block_maxima import (
    abm_estimate,
    disjoint_bm_estimate,
    sliding_bm_estimate,
    disjoint_maxima,
    sliding_maxima,
)
from ._frechet import psi
from ..errors import NoUniqueMaximizer, InvalidArgument
from ..weights import abm_weights


def test_disjoint_maxima():
    np.testing.assert_array_equal(disjoint_maxima([1, 5, 2, 3], 2), [5, 3])


def test_disjoint_maxima_drop_remainder():
    np.testing.assert_array_equal(disjoint_maxima([1, 5, 2, 3, 9], 2), [5, 3])


def test_sliding_maxima():
    np.testing.assert_array_equal(sliding_maxima([1, 5, 2, 3], 2), [5, 5, 3])
    np.testing.assert_array_equal(sliding_maxima([1, 2, 3], 3), [3])


def test_sliding_maxima_increasing():
    raw = np.arange(1.0, 11.0)
    np.testing.assert_array_equal(sliding_maxima(raw, 2), raw[1:])


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.floats(-1e6, 1e6), min_size=2, max_size=60),
    st.integers(2, 60),
)
def test_sliding_maxima_brute_force(values, m):
    if m > len(values):
        m = len(values)
    naive = [max(values[t:t+m]) for t in range(len(values) - m + 1)]
    np.testing.assert_array_equal(sliding_maxima(values, m), naive)


def test_single_window_has_no_maximizer():
    with pytest.raises(NoUniqueMaximizer):
        sliding_bm_estimate([1.0, 2.0, 3.0], 3)


def test_block_size_guards():
    with pytest.raises(InvalidArgument):
        abm_estimate([1.0, 2.0, 3.0], 1)
    with pytest.raises(InvalidArgument):
        abm_estimate([1.0, 2.0, 3.0], 4)
    with pytest.raises(InvalidArgument):
        disjoint_bm_estimate([1.0, 2.0, 3.0], 2)


def test_constant_sample():
    with pytest.raises(NoUniqueMaximizer):
        abm_estimate(np.full(50, 2.0), 5)
    with pytest.raises(NoUniqueMaximizer):
        disjoint_bm_estimate([2.0, 1.0, 2.0, 0.5], 2)


def test_abm_permutation_invariant():
    rng = np.random.default_rng(99)
    raw = rng.standard_t(2, 2_000)
    reference = abm_estimate(raw, 20)
    for _ in range(20):
        assert abm_estimate(rng.permutation(raw), 20) == reference


def test_abm_does_not_modify_input():
    rng = np.random.default_rng(3)
    raw = rng.standard_t(2, 500)
    copy = raw.copy()
    abm_estimate(raw, 10)
    np.testing.assert_array_equal(raw, copy)


def test_disjoint_depends_on_order():
    rng = np.random.default_rng(99)
    raw = np.abs(rng.standard_t(2, 2_000))
    estimates = {
        disjoint_bm_estimate(rng.permutation(raw), 20).gamma_hat
        for _ in range(5)
    }
    assert len(estimates) > 1


def test_abm_uses_binomial_weights():
    rng = np.random.default_rng(5)
    raw = np.abs(rng.standard_t(2, 300)) + 1.0
    result = abm_estimate(raw, 10)
    top = np.sort(raw)[::-1][:291]
    assert abs(psi(result.gamma_hat, top, abm_weights(300, 10).values)) <= 1e-10
    assert result.k_effective == 30.0
    assert result.m == 10


@pytest.mark.parametrize('estimator', [abm_estimate, disjoint_bm_estimate, sliding_bm_estimate])
def test_scale_equivariance(estimator):
    rng = np.random.default_rng(21)
    raw = rng.pareto(2.0, 1_000) + 1.0
    base = estimator(raw, 10)
    scaled = estimator(5.0*raw, 10)
    assert scaled.gamma_hat == pytest.approx(base.gamma_hat, abs=1e-10)
    assert scaled.sigma_hat == pytest.approx(5.0*base.sigma_hat, rel=1e-8)


def test_k_effective():
    raw = np.arange(1.0, 106.0)
    assert disjoint_bm_estimate(raw, 10).k_effective == 10.0
    assert sliding_bm_estimate(raw, 10).k_effective == 10.5


def test_abm_consistent_on_pareto():
    rng = np.random.default_rng(2024)
    estimates = [
        abm_estimate(rng.pareto(2.0, 10_000) + 1.0, 100).gamma_hat
        for _ in range(100)
    ]
    assert 0.45 <= np.mean(estimates) <= 0.55
