"""data containers shared by the estimators"""

from dataclasses import dataclass
import enum


import numpy as np


from ..errors import InvalidArgument


DEFAULT_C = 1e-3
"""left-truncation constant used unless another is given"""

DEFAULT_TOL = 1e-10
"""tolerance on |Psi| at the returned root"""


class Method(enum.Enum):
    """estimators available, valued by their command line names"""

    ABM = 'abm'
    DISJOINT_BM = 'bm'
    SLIDING_BM = 'sliding'
    HILL = 'hill'

    @property
    def label(self):
        return {
            Method.ABM: 'ABM',
            Method.DISJOINT_BM: 'DisjointBM',
            Method.SLIDING_BM: 'SlidingBM',
            Method.HILL: 'Hill',
        }[self]

    @classmethod
    def parse(cls, name):
        """accept either the command line name or the label"""
        if isinstance(name, cls):
            return name
        for method in cls:
            if name in (method.value, method.label):
                return method
        raise InvalidArgument(
            f'unknown method {name!r}, options are {[m.value for m in cls]}'
        )


def as_finite_array(raw, name = 'raw'):
    """copy the input into a 1D float array and refuse NaN or infinity"""
    values = np.asarray(raw, dtype=float).ravel()
    if not np.all(np.isfinite(values)):
        raise InvalidArgument(f'{name} contains non-finite values')
    return values


@dataclass(frozen=True)
class SortedTruncatedSample:
    """descending order statistics after left-truncation at c

    Attributes
    ----------
    values: np.array
        max(X_{n-i+1:n}, c) for i = 1, ..., n
    n_raw: int
        size of the original sample
    c: float
        truncation constant
    """

    values: np.ndarray
    n_raw: int
    c: float

    @classmethod
    def from_raw(cls, raw, c = DEFAULT_C):
        """sort descending and truncate, the input is left untouched"""
        if not c > 0:
            raise InvalidArgument(f'truncation constant c must be positive, got {c}')
        values = as_finite_array(raw)
        ordered = np.maximum(np.sort(values)[::-1], c)
        return cls(values=ordered, n_raw=len(values), c=float(c))


@dataclass(frozen=True)
class SolverDiagnostics:
    """how the root of Psi was found

    Attributes
    ----------
    iterations: int
        Brent iterations after bracketing
    bracket: tuple[float, float]
        final bracket handed to the root finder, Psi changes sign across it
    residual: float
        Psi at the returned root
    """

    iterations: int
    bracket: tuple
    residual: float


@dataclass(frozen=True)
class EstimateResult:
    """an estimate of the extreme value index

    Attributes
    ----------
    method: Method
    gamma_hat: float
    sigma_hat: float | None
        Frechet scale, absent for Hill
    m: int | None
        block size, absent for Hill
    k_effective: float
        n/m for ABM and sliding blocks, the number of blocks for disjoint
        blocks, the number of upper order statistics for Hill
    solver: SolverDiagnostics | None
        absent for Hill
    """

    method: Method
    gamma_hat: float
    sigma_hat: float = None
    m: int = None
    k_effective: float = None
    solver: SolverDiagnostics = None

    def to_row(self):
        """flat dict used when building result tables"""
        return {
            'method': self.method.value,
            'm': self.m,
            'k_effective': self.k_effective,
            'gamma_hat': self.gamma_hat,
            'sigma_hat': self.sigma_hat,
            'iterations': None if self.solver is None else self.solver.iterations,
            'residual': None if self.solver is None else self.solver.residual,
        }
