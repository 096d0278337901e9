"""limit distribution of the all block maxima estimator

sqrt(k) (1/gamma_hat - 1/gamma, sigma_hat/sigma - 1) is asymptotically
normal with covariance M Sigma M^T where Sigma is the covariance of three
Gaussian functionals (Y_1, Y_2, Y_3) of a Brownian motion and M is the
inverse Fisher information of the Frechet likelihood applied to them.
"""

from dataclasses import dataclass
import math


import numpy as np


from ..errors import InvalidArgument
from ._constants import EULER_MASCHERONI as tau, GAMMA_DOUBLE_PRIME_TWO


LOG2 = math.log(2.0)


def _check_gamma(gamma):
    if not (np.isfinite(gamma) and gamma > 0):
        raise InvalidArgument(f'gamma must be positive and finite, got {gamma}')
    return float(gamma)


def m_matrix(gamma) -> np.ndarray:
    """2x3 matrix M mapping (Y_1, Y_2, Y_3) to the estimator limit"""
    g = _check_gamma(gamma)
    return (6/math.pi**2)*np.array([
        [g**-2, (1 - tau)/g, -g**-2],
        [tau - 1, -g*(GAMMA_DOUBLE_PRIME_TWO + 1), 1 - tau],
    ])


def sigma_variance_factor():
    """p such that Var(Y_1) = gamma^2 p, about 0.706"""
    s = tau + LOG2
    return (
        0.5*(tau + math.log(8.0) - 1)
        - (math.pi**2 - 6*s + 6*s**2)/12
        - (1 - tau - LOG2)
        + (2 - tau)*(1 - tau)
    )


def sigma_matrix(gamma) -> np.ndarray:
    """3x3 covariance matrix of (Y_1, Y_2, Y_3)"""
    g = _check_gamma(gamma)
    s11 = g**2*sigma_variance_factor()
    s21 = -(g/2)*(1 - tau + LOG2)
    s22 = 0.5
    s31 = g**2*((3 - tau - LOG2/2)*LOG2 - math.pi**2/12)
    s32 = -g*LOG2
    s33 = 2*g**2*LOG2
    return np.array([
        [s11, s21, s31],
        [s21, s22, s32],
        [s31, s32, s33],
    ])


def limit_covariance(gamma) -> np.ndarray:
    """M Sigma M^T, covariance of the limit of (1/gamma_hat, sigma_hat/sigma)"""
    M = m_matrix(gamma)
    return M @ sigma_matrix(gamma) @ M.T


def abm_variance_constant(gamma = 1.0) -> float:
    """a such that sqrt(k)(gamma_hat - gamma) -> N(0, gamma^2 a)

    The delta method on gamma_hat = 1/(1/gamma_hat) multiplies the variance
    of 1/gamma_hat by gamma^4, so a = gamma^4 Var(1/gamma_hat)/gamma^2 =
    gamma^2 [M Sigma M^T]_11. The gamma powers cancel and a is about 0.393
    whatever gamma is given.
    """
    g = _check_gamma(gamma)
    return float(g**2*limit_covariance(g)[0, 0])


@dataclass(frozen=True)
class AsymptoticMatrices:
    """every matrix of the limit theorem at one gamma

    Attributes
    ----------
    gamma: float
    M: np.array
        2x3
    Sigma: np.array
        3x3 symmetric positive semidefinite
    limit_cov: np.array
        2x2, M Sigma M^T
    variance_constant_a: float
    """

    gamma: float
    M: np.ndarray
    Sigma: np.ndarray
    limit_cov: np.ndarray
    variance_constant_a: float

    @classmethod
    def from_gamma(cls, gamma):
        M = m_matrix(gamma)
        Sigma = sigma_matrix(gamma)
        return cls(
            gamma=float(gamma),
            M=M,
            Sigma=Sigma,
            limit_cov=M @ Sigma @ M.T,
            variance_constant_a=abm_variance_constant(gamma),
        )

    def to_dict(self):
        return {
            'gamma': self.gamma,
            'M': self.M.tolist(),
            'Sigma': self.Sigma.tolist(),
            'limit_cov': self.limit_cov.tolist(),
            'variance_constant_a': self.variance_constant_a,
        }
