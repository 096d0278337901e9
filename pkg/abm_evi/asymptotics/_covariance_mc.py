"""Monte-Carlo check of the covariance matrix of (Y_1, Y_2, Y_3)

With W a standard Brownian motion, E W(u) W(s) = min(u, s), so

    Cov(Y_i, Y_j) = E g_i(U) g_j(S) min(U, S)

for independent standard exponentials U and S with
g_1(u) = gamma (1 + log u), g_2(u) = -1, g_3(u) = gamma/u.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging


import numpy as np


from ..errors import InvalidArgument
from ..distributions import make_stream
from ..simulation import resolve_threads


log = logging.getLogger(__name__)


CHUNK_SIZE = 100_000
MIN_REPS = 1_000


def g_functions(u, gamma):
    """stack g_1(u), g_2(u), g_3(u) along a new first axis"""
    return np.stack([
        gamma*(1.0 + np.log(u)),
        -np.ones_like(u),
        gamma/u,
    ])


def _chunk_moments(gamma, size, rng):
    """sums and sums of squares of the symmetrized per-draw products"""
    u, s = rng.standard_exponential((2, size))
    gu = g_functions(u, gamma)
    gs = g_functions(s, gamma)
    overlap = np.minimum(u, s)
    forward = gu[:, None, :]*gs[None, :, :]
    z = 0.5*(forward + forward.transpose(1, 0, 2))*overlap
    return z.sum(axis=-1), (z*z).sum(axis=-1)


@dataclass(frozen=True)
class CovarianceCheck:
    """Monte-Carlo estimate of Cov(Y) with entrywise standard errors

    Attributes
    ----------
    gamma: float
    reps: int
    estimate: np.array
        3x3, symmetric by construction
    std_error: np.array
        3x3 standard errors of the entries
    """

    gamma: float
    reps: int
    estimate: np.ndarray
    std_error: np.ndarray

    def z_scores(self, reference):
        """(estimate - reference)/std_error entrywise"""
        return (self.estimate - reference)/self.std_error

    def to_dict(self):
        return {
            'gamma': self.gamma,
            'reps': self.reps,
            'estimate': self.estimate.tolist(),
            'std_error': self.std_error.tolist(),
        }


def covariance_mc_check(gamma, reps, seed, *, threads = None) -> CovarianceCheck:
    """estimate Cov(Y) from reps independent pairs (U, S)

    The draws are split in chunks of CHUNK_SIZE, chunk c drawing from
    make_stream(seed, c). Chunk sums are added in chunk order so the result
    does not depend on the number of threads. Off-diagonal entries average
    the (i, j) and (j, i) products of each draw, which makes the estimate
    symmetric.

    Parameters
    ----------
    gamma: float
        extreme value index, > 0
    reps: int
        number of pairs, >= MIN_REPS
    seed: int
        base seed of the chunk streams
    threads: int, optional
        worker threads, see simulation.resolve_threads
    """
    if not gamma > 0:
        raise InvalidArgument(f'gamma must be positive, got {gamma}')
    if int(reps) != reps or reps < MIN_REPS:
        raise InvalidArgument(f'reps must be an integer >= {MIN_REPS}, got {reps}')
    reps = int(reps)
    sizes = [CHUNK_SIZE]*(reps // CHUNK_SIZE)
    if reps % CHUNK_SIZE:
        sizes.append(reps % CHUNK_SIZE)
    threads = resolve_threads(threads)
    log.info('covariance check gamma=%g reps=%d in %d chunks', gamma, reps, len(sizes))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        moments = list(pool.map(
            lambda c: _chunk_moments(gamma, sizes[c], make_stream(seed, c)),
            range(len(sizes)),
        ))
    total = np.zeros((3, 3))
    total_sq = np.zeros((3, 3))
    for chunk_sum, chunk_sq in moments:
        total += chunk_sum
        total_sq += chunk_sq
    mean = total/reps
    variance = (total_sq - reps*mean**2)/(reps - 1)
    return CovarianceCheck(
        gamma=float(gamma),
        reps=reps,
        estimate=mean,
        std_error=np.sqrt(np.maximum(variance, 0.0)/reps),
    )
