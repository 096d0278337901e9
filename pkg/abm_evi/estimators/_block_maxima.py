"""estimators fitting block maxima to the Frechet distribution

All three differ only in which maxima are fitted and how they are weighted:

- all block maxima: every size-m subset of the sample is a block, which
  reduces to the top n-m+1 order statistics with binomial weights
- disjoint blocks: floor(n/m) consecutive blocks from the front of the
  series, any trailing remainder is discarded
- sliding blocks: all n-m+1 windows of m consecutive observations
"""

from collections import deque


import numpy as np


from ..errors import InvalidArgument
from ..weights import abm_weights
from ._sample import (
    Method,
    EstimateResult,
    SortedTruncatedSample,
    as_finite_array,
    DEFAULT_C,
    DEFAULT_TOL,
)
from ._frechet import fit_frechet_wml


def _check_block_size(m):
    if int(m) != m or m < 2:
        raise InvalidArgument(f'block size m must be an integer >= 2, got {m}')
    return int(m)


def disjoint_maxima(raw, m) -> np.ndarray:
    """maxima of the floor(n/m) disjoint blocks taken from the front"""
    m = _check_block_size(m)
    values = as_finite_array(raw)
    n_blocks = len(values) // m
    return values[:n_blocks*m].reshape(n_blocks, m).max(axis=1)


def sliding_maxima(raw, m) -> np.ndarray:
    """maxima of every window raw[t:t+m], t = 0, ..., n-m

    A deque holds the indices of the current window whose values are still
    candidates for a maximum, their values decreasing from front to back.
    Each index enters and leaves the deque at most once.
    """
    m = _check_block_size(m)
    values = as_finite_array(raw)
    n = len(values)
    if n < m:
        raise InvalidArgument(f'need at least m={m} observations, got {n}')
    maxima = np.empty(n - m + 1)
    candidates = deque()
    for t, x in enumerate(values):
        while candidates and values[candidates[-1]] <= x:
            candidates.pop()
        candidates.append(t)
        if candidates[0] <= t - m:
            candidates.popleft()
        if t >= m - 1:
            maxima[t - m + 1] = values[candidates[0]]
    return maxima


def _fit_equal_weights(maxima, c, tol):
    truncated = np.maximum(maxima, c)
    weights = np.full(len(truncated), 1.0/len(truncated))
    return fit_frechet_wml(truncated, weights, tol=tol)


def abm_estimate(raw, m, *, c = DEFAULT_C, tol = DEFAULT_TOL) -> EstimateResult:
    """all block maxima estimator of the extreme value index

    Parameters
    ----------
    raw: np.array
        observations, only their order statistics are used
    m: int
        block size, 2 <= m <= n
    c: float, optional
        left-truncation constant
    tol: float, optional
        tolerance on |Psi| at the root

    Returns
    -------
    EstimateResult
        with k_effective = n/m
    """
    m = _check_block_size(m)
    sample = SortedTruncatedSample.from_raw(raw, c)
    n = sample.n_raw
    if n < m:
        raise InvalidArgument(f'need at least m={m} observations, got {n}')
    weights = abm_weights(n, m)
    gamma_hat, sigma_hat, solver = fit_frechet_wml(
        sample.values[:len(weights)], weights.values, tol=tol
    )
    return EstimateResult(
        method=Method.ABM,
        gamma_hat=gamma_hat,
        sigma_hat=sigma_hat,
        m=m,
        k_effective=n/m,
        solver=solver,
    )


def disjoint_bm_estimate(raw, m, *, c = DEFAULT_C, tol = DEFAULT_TOL) -> EstimateResult:
    """classical block maxima estimator on disjoint consecutive blocks

    Requires at least two complete blocks. The k_effective of the
    result is the number of blocks floor(n/m).
    """
    m = _check_block_size(m)
    maxima = disjoint_maxima(raw, m)
    if len(maxima) < 2:
        raise InvalidArgument(f'need at least two blocks of size {m}, got {len(maxima)}')
    gamma_hat, sigma_hat, solver = _fit_equal_weights(maxima, c, tol)
    return EstimateResult(
        method=Method.DISJOINT_BM,
        gamma_hat=gamma_hat,
        sigma_hat=sigma_hat,
        m=m,
        k_effective=float(len(maxima)),
        solver=solver,
    )


def sliding_bm_estimate(raw, m, *, c = DEFAULT_C, tol = DEFAULT_TOL) -> EstimateResult:
    """plain equal-weight Frechet likelihood on sliding window maxima

    This is not the bias-corrected quasi-likelihood of the sliding-blocks
    literature, only the ordinary likelihood of the window maxima treated
    as if independent. With n = m there is a single window and the fit
    fails with NoUniqueMaximizer.
    """
    m = _check_block_size(m)
    values = as_finite_array(raw)
    n = len(values)
    if n < m:
        raise InvalidArgument(f'need at least m={m} observations, got {n}')
    gamma_hat, sigma_hat, solver = _fit_equal_weights(sliding_maxima(values, m), c, tol)
    return EstimateResult(
        method=Method.SLIDING_BM,
        gamma_hat=gamma_hat,
        sigma_hat=sigma_hat,
        m=m,
        k_effective=n/m,
        solver=solver,
    )
