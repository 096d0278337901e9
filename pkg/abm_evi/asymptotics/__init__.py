"""asymptotic theory of the all block maxima estimator

    from abm_evi import asymptotics
    asymptotics.abm_variance_constant()          # about 0.393
    asymptotics.AsymptoticMatrices.from_gamma(0.5).limit_cov

The closed-form covariance matrix can be checked against simulated
Brownian functionals.

    check = asymptotics.covariance_mc_check(gamma = 1.0, reps = 100_000, seed = 0)
    check.z_scores(asymptotics.sigma_matrix(1.0))
"""

from ._constants import (
    EULER_MASCHERONI,
    GAMMA_DOUBLE_PRIME_TWO,
    HILL_VARIANCE,
    DISJOINT_BM_VARIANCE,
    SLIDING_BM_VARIANCE,
    gamma_double_prime_two,
    competitor_variance_constants,
)
from ._matrices import (
    AsymptoticMatrices,
    m_matrix,
    sigma_matrix,
    sigma_variance_factor,
    limit_covariance,
    abm_variance_constant,
)
from ._covariance_mc import CovarianceCheck, covariance_mc_check, g_functions
