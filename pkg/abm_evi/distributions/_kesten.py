"""tail index of a GARCH(1,1) process from the Kesten equation

The stationary GARCH(1,1) series has P(|X| > x) ~ C x^(-2 kappa) where
kappa > 0 solves E(l1 e^2 + l2)^kappa = 1, so gamma = 1/(2 kappa).
The innovations e are Student-t(nu) scaled to unit variance, matching
garch_series.
"""

import functools
import logging
import math


import numpy as np
import scipy.integrate
import scipy.optimize
import scipy.stats


from ..errors import InvalidArgument, NoKestenIndex
from ._samplers import unit_variance_scale


log = logging.getLogger(__name__)


QUAD_ABS_TOL = 1e-9
TAIL_MASS = 1e-12
KAPPA_TOL = 1e-8
MOMENT_LIMIT_GAP = 1e-6
SCAN_POINTS = 64


def _half_line_expectation(func, density, cutoff):
    """2 * integral of func(e) density(e) over [0, inf), split at cutoff"""
    def integrand(e):
        return func(e)*density(e)
    body, _ = scipy.integrate.quad(integrand, 0.0, cutoff, epsabs=QUAD_ABS_TOL, limit=200)
    tail, _ = scipy.integrate.quad(integrand, cutoff, np.inf, epsabs=QUAD_ABS_TOL, limit=200)
    return 2.0*(body + tail)


@functools.lru_cache(maxsize=None)
def kesten_gamma(l1, l2, nu) -> float:
    """extreme value index 1/(2 kappa) of a GARCH(1,1) with t(nu) innovations

    h(kappa) = E(l1 e^2 + l2)^kappa - 1 is convex with h(0) = 0. The
    expectation is computed by adaptive Gauss-Kronrod quadrature of the even
    integrand on [0, T] and [T, inf) where the t tail beyond T has mass
    TAIL_MASS. A scan over (0, nu/2) finds the first kappa with h > 0 and
    bisection then locates the root to KAPPA_TOL.

    Parameters
    ----------
    l1: float
        ARCH coefficient, >= 0
    l2: float
        GARCH coefficient in [0, 1)
    nu: float
        degrees of freedom of the innovations, > 2

    Raises
    ------
    NoKestenIndex
        E log(l1 e^2 + l2) >= 0, or h stays negative up to the moment limit
        nu/2, in which case the tail is governed by the innovations
    """
    if l1 < 0 or not 0 <= l2 < 1 or l1 + l2 <= 0:
        raise InvalidArgument(f'need l1 >= 0, 0 <= l2 < 1 and l1 + l2 > 0, got {l1}, {l2}')
    distribution = scipy.stats.t(df=nu, scale=unit_variance_scale(nu))
    density = distribution.pdf
    cutoff = distribution.isf(TAIL_MASS/2)

    def base(e):
        return l1*e*e + l2

    drift = _half_line_expectation(lambda e: math.log(base(e)), density, cutoff)
    if drift >= 0:
        raise NoKestenIndex(f'E log(l1 e^2 + l2) = {drift:.3g} >= 0, no stationary tail index')

    def h(kappa):
        return _half_line_expectation(lambda e: base(e)**kappa, density, cutoff) - 1.0

    kappa_max = nu/2 - MOMENT_LIMIT_GAP
    upper = None
    lower = None
    for kappa in kappa_max*np.arange(1, SCAN_POINTS + 1)/SCAN_POINTS:
        if h(kappa) > 0:
            upper = kappa
            break
        lower = kappa
    if upper is None:
        raise NoKestenIndex(
            f'E(l1 e^2 + l2)^kappa < 1 for all kappa < nu/2 = {nu/2:g}'
            f' (l1={l1}, l2={l2})'
        )
    if lower is None:
        lower = upper/2
        while h(lower) >= 0:
            lower /= 2
    kappa = scipy.optimize.bisect(h, lower, upper, xtol=KAPPA_TOL)
    log.debug('Kesten index kappa=%.8f for l1=%g l2=%g nu=%g', kappa, l1, l2, nu)
    return 1.0/(2.0*kappa)
