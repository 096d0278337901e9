"""constants appearing in the limit distribution of the estimators

Attributes
----------
EULER_MASCHERONI: float
    Euler-Mascheroni constant to 20 significant digits
GAMMA_DOUBLE_PRIME_TWO: float
    second derivative of the Gamma function at 2
HILL_VARIANCE: float
    asymptotic variance of the Hill estimator in units of gamma^2
DISJOINT_BM_VARIANCE: float
    asymptotic variance of the disjoint block maxima ML estimator in units of gamma^2
SLIDING_BM_VARIANCE: float
    asymptotic variance of the sliding block quasi-ML estimator in units of gamma^2
"""

import math

EULER_MASCHERONI = 0.57721566490153286061

HILL_VARIANCE = 1.0
DISJOINT_BM_VARIANCE = 0.608
SLIDING_BM_VARIANCE = 0.494


def gamma_double_prime_two():
    r"""closed form of Gamma''(2)

    Gamma''(x) = Gamma(x) (digamma(x)^2 + trigamma(x)) and at x = 2
    digamma(2) = 1 - tau and trigamma(2) = pi^2/6 - 1.

    $$
        \Gamma''(2) = (1-\tau)^2 + \frac{\pi^2}{6} - 1
    $$
    """
    return (1 - EULER_MASCHERONI)**2 + math.pi**2/6 - 1


GAMMA_DOUBLE_PRIME_TWO = gamma_double_prime_two()


def competitor_variance_constants():
    """asymptotic variances of the other estimators, in units of gamma^2"""
    return {
        'sliding': SLIDING_BM_VARIANCE,
        'disjoint': DISJOINT_BM_VARIANCE,
        'hill': HILL_VARIANCE,
    }
