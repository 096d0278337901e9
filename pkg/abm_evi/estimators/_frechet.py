"""weighted maximum likelihood for the two-parameter Frechet distribution

With weights w_i on observations x_i > 0 the Frechet log-likelihood

    L(gamma, sigma) = sum_i w_i [ -log(gamma sigma) - (x_i/sigma)^(-1/gamma)
                                  - (1/gamma + 1) log(x_i/sigma) ]

is maximized in sigma by sigma(gamma) = (sum_i w_i x_i^(-1/gamma))^(-gamma)
and the profile score in gamma reduces to the root of

    Psi(gamma) = gamma + sum w x^(-1/gamma) log x / sum w x^(-1/gamma) - sum w log x

Psi is strictly increasing in gamma (its derivative is one plus a tilted
variance of log x over gamma^2), negative near zero and positive for large
gamma as soon as two distinct values carry weight, so the root is unique.

The three weighted sums use numpy's pairwise summation, whose rounding
error grows like log n and stays far below the root tolerance.
"""

import logging


import numpy as np
import scipy.optimize


from ..errors import InvalidArgument, NoUniqueMaximizer, BracketingFailed, FitError
from ._sample import SolverDiagnostics, DEFAULT_TOL


log = logging.getLogger(__name__)


DEFAULT_BRACKET = (0.05, 2.0)
GAMMA_SEARCH_LIMITS = (1e-6, 1e3)
BRACKET_GROWTH = 4.0
MAX_ITERATIONS = 200


def _log_spacings(sample_values, weights):
    """validate and reduce to (log spacing above the minimum, log minimum, weights)

    Entries with zero weight are dropped and the remaining weights are
    normalized to sum to one. Spacings d_i = log x_i - log x_min are
    non-negative so exp(-d_i/gamma) lies in (0, 1] for every gamma > 0.
    """
    x = np.asarray(sample_values, dtype=float).ravel()
    w = np.asarray(weights, dtype=float).ravel()
    if x.shape != w.shape:
        raise InvalidArgument(
            f'sample and weights have different lengths ({len(x)} vs {len(w)})'
        )
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(w))):
        raise InvalidArgument('sample and weights must be finite')
    if np.any(w < 0):
        raise InvalidArgument('weights must be non-negative')
    keep = w > 0
    if not np.any(keep):
        raise InvalidArgument('all weights are zero')
    x, w = x[keep], w[keep]
    if np.any(x <= 0):
        raise InvalidArgument('sample values must be positive, truncate at c first')
    y = np.log(x)
    y_min = y.min()
    return y - y_min, y_min, w / w.sum()


def _psi(gamma, d, w):
    t = w * np.exp(-d / gamma)
    return gamma + np.sum(t * d) / np.sum(t) - np.sum(w * d)


def psi(gamma, sample_values, weights) -> float:
    """evaluate the profile score Psi at gamma

    Powers x^(-1/gamma) are evaluated relative to the smallest weighted
    value, the common factor cancels in the ratio and nothing can overflow.
    Weights are normalized to sum to one before use.

    Parameters
    ----------
    gamma: float
        positive trial value of the extreme value index
    sample_values: np.array
        positive observations (order does not matter)
    weights: np.array
        non-negative weights of the same length

    Returns
    -------
    float
        Psi(gamma), exactly gamma if every weighted value is the same
    """
    if not (np.isfinite(gamma) and gamma > 0):
        raise InvalidArgument(f'gamma must be positive and finite, got {gamma}')
    d, _, w = _log_spacings(sample_values, weights)
    if not np.any(d > 0):
        return float(gamma)
    return float(_psi(gamma, d, w))


def _bracket(f, lower, upper):
    lo_limit, hi_limit = GAMMA_SEARCH_LIMITS
    f_lower, f_upper = f(lower), f(upper)
    while f_lower > 0 and lower > lo_limit:
        lower = max(lower / BRACKET_GROWTH, lo_limit)
        f_lower = f(lower)
    while f_upper < 0 and upper < hi_limit:
        upper = min(upper * BRACKET_GROWTH, hi_limit)
        f_upper = f(upper)
    if f_lower > 0 or f_upper < 0:
        raise BracketingFailed(lower, upper, f_lower, f_upper)
    return lower, upper


def fit_frechet_wml(sample_values, weights, *, tol = DEFAULT_TOL, bracket_hint = None):
    """fit (gamma, sigma) of a Frechet distribution by weighted maximum likelihood

    The bracket starts at bracket_hint (or DEFAULT_BRACKET) and each end is
    pushed outward by a factor BRACKET_GROWTH until Psi changes sign, never
    leaving GAMMA_SEARCH_LIMITS. Brent's method then runs to machine
    precision in gamma, which leaves |Psi| well below tol.

    Parameters
    ----------
    sample_values: np.array
        positive observations
    weights: np.array
        non-negative weights, normalized internally
    tol: float, optional
        largest acceptable |Psi| at the returned root
    bracket_hint: tuple[float, float], optional
        starting bracket for gamma

    Returns
    -------
    tuple(float, float, SolverDiagnostics)
        gamma_hat, sigma_hat and how the root was found

    Raises
    ------
    NoUniqueMaximizer
        every observation with positive weight has the same value
    BracketingFailed
        Psi keeps its sign over the whole search range
    FitError
        Brent did not converge, or |Psi| > tol at its root
    """
    d, y_min, w = _log_spacings(sample_values, weights)
    if not np.any(d > 0):
        raise NoUniqueMaximizer(
            'all weighted observations are identical, the likelihood has no unique maximizer'
        )
    lower, upper = DEFAULT_BRACKET if bracket_hint is None else bracket_hint
    if not 0 < lower < upper:
        raise InvalidArgument(f'bracket must satisfy 0 < lower < upper, got {bracket_hint}')

    def f(gamma):
        return _psi(gamma, d, w)

    lower, upper = _bracket(f, lower, upper)
    gamma_hat, info = scipy.optimize.brentq(
        f, lower, upper,
        xtol=np.finfo(float).tiny,
        rtol=4*np.finfo(float).eps,
        maxiter=MAX_ITERATIONS,
        full_output=True,
        disp=False,
    )
    if not info.converged:
        raise FitError(f'Brent iteration did not converge in {MAX_ITERATIONS} steps')
    residual = float(f(gamma_hat))
    if not abs(residual) <= tol:
        raise FitError(
            f'|Psi| = {abs(residual):.3g} at gamma = {gamma_hat:.6g} exceeds the tolerance {tol:.3g}'
        )
    sigma_hat = float(np.exp(y_min) * np.sum(w * np.exp(-d / gamma_hat)) ** (-gamma_hat))
    log.debug('Frechet fit gamma=%.6g sigma=%.6g in %d iterations',
              gamma_hat, sigma_hat, info.iterations)
    return float(gamma_hat), sigma_hat, SolverDiagnostics(
        iterations=int(info.iterations),
        bracket=(float(lower), float(upper)),
        residual=residual,
    )
