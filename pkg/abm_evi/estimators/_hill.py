"""Hill estimator, kept as the variance benchmark for the block maxima methods"""

import numpy as np


from ..errors import InvalidArgument
from ._sample import Method, EstimateResult, as_finite_array


def hill_estimate(raw, k) -> EstimateResult:
    """mean log excess of the k largest observations over X_{n-k:n}

    Parameters
    ----------
    raw: np.array
        observations, no truncation is applied here
    k: int
        number of upper order statistics, 1 <= k <= n-1

    Returns
    -------
    EstimateResult
        sigma_hat, m and solver are absent; k_effective = k
    """
    values = as_finite_array(raw)
    n = len(values)
    if int(k) != k or k < 1 or k > n - 1:
        raise InvalidArgument(f'k must be an integer in [1, n-1={n-1}], got {k}')
    k = int(k)
    ordered = np.sort(values)[::-1]
    threshold = ordered[k]
    if threshold <= 0:
        raise InvalidArgument(
            f'X_(n-k:n) = {threshold} is not positive, truncate the sample or lower k'
        )
    gamma_hat = np.mean(np.log(ordered[:k])) - np.log(threshold)
    return EstimateResult(
        method=Method.HILL,
        gamma_hat=float(gamma_hat),
        k_effective=float(k),
    )
