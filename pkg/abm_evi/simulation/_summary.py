"""Monte-Carlo summary statistics of repeated estimates"""

from dataclasses import dataclass, asdict
import math


import numpy as np


def population_moments(values, truth):
    """mean, spread and error of the estimates around a known truth

    The variance divides by the number of values (not N-1) so that
    mse = bias^2 + variance holds up to rounding.

    Parameters
    ----------
    values: np.array
        finite estimates
    truth: float
        value being estimated

    Returns
    -------
    dict
        mean, bias, variance, mse and std_error (standard error of the mean)
    """
    values = np.asarray(values, dtype=float)
    mean = np.average(values)
    variance = np.average((values - mean)**2)
    return {
        'mean': float(mean),
        'bias': float(mean - truth),
        'variance': float(variance),
        'mse': float(np.average((values - truth)**2)),
        'std_error': float(np.sqrt(variance/len(values))),
    }


SUMMARY_COLUMNS = (
    'method', 'n', 'k', 'm', 'true_gamma', 'mean', 'bias', 'variance', 'mse',
    'std_error', 'implied_asym_var', 'reps_succeeded', 'reps_failed', 'valid',
)


@dataclass(frozen=True)
class McCell:
    """summary of one (method, n, k) cell across replicates

    Invalid cells (more than half the fits failed) carry NaN statistics.

    Attributes
    ----------
    method: str
        command line name of the estimator
    n, k: int
    m: int | None
        block size, None for Hill
    true_gamma: float
    mean, bias, variance, mse, std_error: float
    implied_asym_var: float
        k variance/gamma^2
    reps_succeeded, reps_failed: int
    valid: bool
    """

    method: str
    n: int
    k: int
    m: int
    true_gamma: float
    mean: float
    bias: float
    variance: float
    mse: float
    std_error: float
    implied_asym_var: float
    reps_succeeded: int
    reps_failed: int
    valid: bool

    @classmethod
    def from_estimates(cls, estimates, *, method, n, k, m, true_gamma):
        """summarise the estimates of one cell, NaN marking a failed fit"""
        estimates = np.asarray(estimates, dtype=float)
        ok = np.isfinite(estimates)
        succeeded = int(ok.sum())
        failed = len(estimates) - succeeded
        valid = succeeded > 0 and failed <= len(estimates)/2
        if valid:
            moments = population_moments(estimates[ok], true_gamma)
            implied = k*moments['variance']/true_gamma**2
        else:
            moments = dict.fromkeys(['mean', 'bias', 'variance', 'mse', 'std_error'], math.nan)
            implied = math.nan
        return cls(
            method=method, n=n, k=k, m=m, true_gamma=true_gamma,
            implied_asym_var=implied,
            reps_succeeded=succeeded, reps_failed=failed, valid=valid,
            **moments,
        )

    def to_row(self):
        return asdict(self)


@dataclass(frozen=True)
class McSummary:
    """every cell of an experiment, in the order they were run

    Attributes
    ----------
    config: ExperimentConfig
    cells: tuple[McCell]
    """

    config: object
    cells: tuple

    def cell(self, method, n, k) -> McCell:
        for c in self.cells:
            if (c.method, c.n, c.k) == (method, n, k):
                return c
        raise KeyError((method, n, k))

    def for_method(self, method):
        return [c for c in self.cells if c.method == method]

    def to_rows(self):
        return [c.to_row() for c in self.cells]
