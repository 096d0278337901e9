import math

import numpy as np
import pytest

from ._hill import hill_estimate
from ..errors import InvalidArgument
from ..distributions import make_stream


def test_hand_computation():
    raw = np.exp([1.0, 2.0, 3.0, 4.0])
    assert hill_estimate(raw, 2).gamma_hat == pytest.approx(1.5, abs=1e-14)


def test_constant_sample_is_zero():
    assert hill_estimate([2.0]*4, 2).gamma_hat == 0.0


def test_scale_invariant_and_permutation_invariant():
    rng = np.random.default_rng(1)
    raw = rng.pareto(1.0, 1_000) + 1.0
    base = hill_estimate(raw, 50)
    assert hill_estimate(7.0*raw, 50).gamma_hat == pytest.approx(base.gamma_hat, abs=1e-12)
    assert hill_estimate(rng.permutation(raw), 50) == base
    assert base.sigma_hat is None
    assert base.m is None
    assert base.k_effective == 50


def test_threshold_must_be_positive():
    with pytest.raises(InvalidArgument):
        hill_estimate([3.0, 2.0, -1.0, -2.0], 2)


@pytest.mark.parametrize('k', [0, 4, 2.5])
def test_k_range(k):
    with pytest.raises(InvalidArgument):
        hill_estimate([4.0, 3.0, 2.0, 1.0], k)


@pytest.mark.parametrize('gamma', [0.5, 1.0])
def test_recovers_pareto_index(gamma):
    rng = make_stream(int(100*gamma))
    raw = (1.0 - rng.random(100_000))**(-gamma)
    assert hill_estimate(raw, 1_000).gamma_hat == pytest.approx(gamma, abs=0.05)


def test_log_spacing_mean():
    raw = [1.0, math.e, math.e**3]
    assert hill_estimate(raw, 1).gamma_hat == pytest.approx(2.0, abs=1e-14)
