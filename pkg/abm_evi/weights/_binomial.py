"""binomial weights and their exponential approximation"""

from dataclasses import dataclass
import math


import numpy as np


from ..errors import InvalidArgument


UNDERFLOW_FLOOR = 1e-300
"""weights below this are set to zero and the recursion stops"""


def _check_block_size(n, m):
    if int(n) != n or n < 1:
        raise InvalidArgument(f'sample size n must be a positive integer, got {n}')
    if int(m) != m or m < 2 or m > n:
        raise InvalidArgument(f'block size m must be an integer in [2, n={n}], got {m}')
    return int(n), int(m)


@dataclass(frozen=True)
class WeightVector:
    """weights attached to the descending order statistics

    Attributes
    ----------
    values: np.array
        values[i-1] is the weight of the i-th largest observation
    n: int
        sample size
    m: int
        block size
    """

    values: np.ndarray
    n: int
    m: int

    def __len__(self):
        return len(self.values)

    @property
    def k(self):
        """effective number of blocks n/m (real valued)"""
        return self.n / self.m


def abm_weights(n, m) -> WeightVector:
    """weights p_i = C(n-i, m-1)/C(n, m) for i = 1, ..., n-m+1

    The weights are built by the multiplicative recursion

        p_1 = m/n,   p_{i+1} = p_i (n-m-i+1)/(n-i)

    which follows from the ratio of consecutive binomial coefficients.
    Factorials are never formed. Once a weight drops below UNDERFLOW_FLOOR
    it and every later weight is set to exactly zero. The vector is not
    renormalized since the analytic sum is already one.

    Parameters
    ----------
    n: int
        sample size
    m: int
        block size, 2 <= m <= n

    Returns
    -------
    WeightVector
        length n-m+1, strictly decreasing whenever n > m
    """
    n, m = _check_block_size(n, m)
    i = np.arange(1, n - m + 1, dtype=float)
    ratios = (n - m - i + 1) / (n - i)
    values = np.empty(n - m + 1)
    values[0] = m / n
    values[1:] = ratios
    values = np.cumprod(values)
    below = np.flatnonzero(values < UNDERFLOW_FLOOR)
    if below.size > 0:
        values[below[0]:] = 0.0
    return WeightVector(values=values, n=n, m=m)


def exp_weights(n, m, count, *, normalize = False) -> np.ndarray:
    """exponential weights q_i = exp(-(i-1)/k)/k with k = n/m

    Parameters
    ----------
    n, m: int
        sample and block size, validated as for abm_weights
    count: int
        number of weights to return, 1 <= count <= n-m+1
    normalize: bool, optional
        scale by k (1 - exp(-1/k)) so the weights over an infinite index
        sum to one; by default the weights are left as 1/k times the
        exponential, whose infinite sum is only approximately one

    Returns
    -------
    np.array
        q_1, ..., q_count
    """
    n, m = _check_block_size(n, m)
    if int(count) != count or count < 1 or count > n - m + 1:
        raise InvalidArgument(f'count must be in [1, n-m+1={n-m+1}], got {count}')
    k = n / m
    q = np.exp(-np.arange(int(count)) / k) / k
    if normalize:
        q *= -k * math.expm1(-1 / k)
    return q


def weight_approximation_error(n, m, d) -> float:
    """largest relative gap between the binomial and exponential weights

    The maximum of |p_i/q_i - 1| is taken over
    1 <= i <= min(floor(k (log k)^d), n-m+1). When k (log k)^d < 1
    (possible for k < e) the range is the single index i = 1.

    Parameters
    ----------
    n, m: int
        sample and block size
    d: float
        positive exponent on log k controlling how deep into the sample
        the comparison reaches
    """
    n, m = _check_block_size(n, m)
    if not d > 0:
        raise InvalidArgument(f'd must be positive, got {d}')
    k = n / m
    count = math.floor(k * math.log(k) ** d) if k > 1 else 1
    count = min(max(count, 1), n - m + 1)
    p = abm_weights(n, m).values[:count]
    q = exp_weights(n, m, count)
    return float(np.max(np.abs(p / q - 1.0)))
