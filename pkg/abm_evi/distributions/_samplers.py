"""random series for every simulation design

Every sampler takes an explicit numpy Generator and draws from nothing
else, so a design is reproduced exactly by its seed. Streams for parallel
replicates come from make_stream(seed, replicate) and never overlap.
"""

import numpy as np


from ..errors import InvalidArgument


DEFAULT_BURN_IN = 100
"""observations discarded from the front of AR(1) and GARCH series"""


def make_stream(seed, *stream_ids) -> np.random.Generator:
    """independent generator for the stream identified by (seed, *stream_ids)"""
    return np.random.default_rng([int(seed), *(int(i) for i in stream_ids)])


def pareto_quantile(u, gamma):
    """Pareto(gamma) quantile at upper-tail probability u: u^(-gamma)"""
    return np.power(u, -gamma)


def frechet_quantile(u, gamma):
    """Frechet(gamma) quantile at probability u: (-log u)^(-gamma)"""
    with np.errstate(divide='ignore'):
        return np.power(-np.log(u), -gamma)


def student_t(nu, size, rng):
    """signed Student-t(nu) draws as Z/sqrt(V/nu)

    All normals are drawn before all chi-squares, which fixes the stream
    consumption for a given size.
    """
    if not nu > 0:
        raise InvalidArgument(f'degrees of freedom must be positive, got {nu}')
    z = rng.standard_normal(size)
    v = rng.chisquare(nu, size)
    return z / np.sqrt(v / nu)


def unit_variance_scale(nu):
    """factor turning a Student-t(nu) draw into one with unit variance"""
    if not nu > 2:
        raise InvalidArgument(f'unit variance needs nu > 2, got {nu}')
    return np.sqrt((nu - 2) / nu)


def ar1_filter(phi, innovations):
    """X_1 = e_1, X_t = phi X_(t-1) + e_t"""
    innovations = np.asarray(innovations, dtype=float)
    x = np.empty_like(innovations)
    previous = 0.0
    for t, e in enumerate(innovations):
        previous = phi*previous + e
        x[t] = previous
    return x


def ar1_series(phi, n, *, burn_in = DEFAULT_BURN_IN, nu = 2.0, rng):
    """AR(1) series with signed Student-t(nu) innovations

    n + burn_in values are generated and the last n returned.
    """
    if not -1 < phi < 1:
        raise InvalidArgument(f'AR(1) coefficient must satisfy |phi| < 1, got {phi}')
    innovations = student_t(nu, n + burn_in, rng)
    return ar1_filter(phi, innovations)[burn_in:]


def garch_filter(l0, l1, l2, innovations):
    """GARCH(1,1) recursion driven by the given innovations

    sigma_1^2 = l0/(1 - l1 - l2), the fixed point of the deterministic part,
    sigma_t^2 = l0 + l1 X_(t-1)^2 + l2 sigma_(t-1)^2 and X_t = sigma_t e_t.

    Returns
    -------
    tuple(np.array, np.array)
        the series X and the conditional variances sigma^2
    """
    _check_garch(l0, l1, l2)
    innovations = np.asarray(innovations, dtype=float)
    x = np.empty_like(innovations)
    sigma2 = np.empty_like(innovations)
    variance = l0 / (1.0 - l1 - l2)
    for t, e in enumerate(innovations):
        if t > 0:
            variance = l0 + l1*x[t-1]**2 + l2*variance
        sigma2[t] = variance
        x[t] = np.sqrt(variance)*e
    return x, sigma2


def _check_garch(l0, l1, l2):
    if not l0 > 0:
        raise InvalidArgument(f'GARCH l0 must be positive, got {l0}')
    if l1 < 0 or l2 < 0:
        raise InvalidArgument(f'GARCH l1 and l2 must be non-negative, got {l1}, {l2}')
    if not l1 + l2 < 1:
        raise InvalidArgument(
            f'GARCH stationarity requires l1 + l2 < 1, got {l1} + {l2} = {l1 + l2}'
        )


def garch_series(l0, l1, l2, n, *, nu = 6.0, burn_in = DEFAULT_BURN_IN, rng):
    """GARCH(1,1) series with unit-variance Student-t(nu) innovations

    n + burn_in values are generated and the last n returned.
    """
    _check_garch(l0, l1, l2)
    innovations = unit_variance_scale(nu)*student_t(nu, n + burn_in, rng)
    return garch_filter(l0, l1, l2, innovations)[0][burn_in:]


def scale_het_series(r, n, *, nu = 2.0, rng):
    """|e_t| for the first half, r |e_t| for the second half"""
    if not r > 0:
        raise InvalidArgument(f'scale ratio r must be positive, got {r}')
    if n % 2 != 0:
        raise InvalidArgument(f'scale heterogeneity splits the sample at n/2, n={n} is odd')
    x = np.abs(student_t(nu, n, rng))
    x[n//2:] *= r
    return x


def sample_iid(spec, n, rng):
    """n independent draws from an i.i.d. family by inverse transform

    Pareto uses U in (0, 1] and Frechet U in [0, 1) so that neither
    quantile can be infinite. Half Student-t is |T| and Student-t is T.
    """
    family = spec.family
    if family == 'pareto':
        return pareto_quantile(1.0 - rng.random(n), spec.params['gamma'])
    if family == 'frechet':
        return frechet_quantile(rng.random(n), spec.params['gamma'])
    if family == 'half-t':
        return np.abs(student_t(spec.params['nu'], n, rng))
    if family == 'student-t':
        return student_t(spec.params['nu'], n, rng)
    raise InvalidArgument(f'{family} is not an i.i.d. family')
