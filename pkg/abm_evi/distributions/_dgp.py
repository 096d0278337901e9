"""description of a data generating process"""

from dataclasses import dataclass, field
import math


import numpy as np


from ..errors import InvalidArgument
from . import _samplers
from ._kesten import kesten_gamma


FAMILIES = {
    'pareto': ('gamma',),
    'frechet': ('gamma',),
    'half-t': ('nu',),
    'student-t': ('nu',),
    'ar1': ('phi', 'nu'),
    'garch': ('l0', 'l1', 'l2', 'nu'),
    'scale-het': ('r', 'nu'),
}
"""family name -> parameters it requires"""

IID_FAMILIES = ('pareto', 'frechet', 'half-t', 'student-t')


@dataclass(frozen=True)
class DgpSpec:
    """a data generating process with its known tail behaviour

    Use the named constructors rather than filling params by hand.

        DgpSpec.half_t(2).true_gamma  # 0.5
        DgpSpec.garch(0.5, 0.11, 0.88).true_gamma  # about 0.35

    Attributes
    ----------
    family: str
        one of FAMILIES
    params: dict
        family parameters, see FAMILIES
    burn_in: int
        leading observations discarded, 0 for i.i.d. families
    """

    family: str
    params: dict = field(default_factory=dict)
    burn_in: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidArgument(
                f'unknown family {self.family!r}, options are {list(FAMILIES)}'
            )
        missing = [p for p in FAMILIES[self.family] if p not in self.params]
        if missing:
            raise InvalidArgument(f'{self.family} needs parameters {missing}')
        extra = [p for p in self.params if p not in FAMILIES[self.family]]
        if extra:
            raise InvalidArgument(f'{self.family} does not take parameters {extra}')
        p = self.params
        if self.family in ('pareto', 'frechet') and not p['gamma'] > 0:
            raise InvalidArgument(f'gamma must be positive, got {p["gamma"]}')
        if 'nu' in p and not p['nu'] > 0:
            raise InvalidArgument(f'nu must be positive, got {p["nu"]}')
        if self.family == 'ar1' and not -1 < p['phi'] < 1:
            raise InvalidArgument(f'AR(1) coefficient must satisfy |phi| < 1, got {p["phi"]}')
        if self.family == 'garch':
            _samplers._check_garch(p['l0'], p['l1'], p['l2'])
            _samplers.unit_variance_scale(p['nu'])
        if self.family == 'scale-het' and not p['r'] > 0:
            raise InvalidArgument(f'scale ratio r must be positive, got {p["r"]}')
        if int(self.burn_in) != self.burn_in or self.burn_in < 0:
            raise InvalidArgument(f'burn_in must be a non-negative integer, got {self.burn_in}')
        if self.family in IID_FAMILIES and self.burn_in != 0:
            raise InvalidArgument(f'{self.family} is i.i.d. and takes no burn-in')

    @classmethod
    def pareto(cls, gamma):
        return cls('pareto', {'gamma': gamma})

    @classmethod
    def frechet(cls, gamma):
        return cls('frechet', {'gamma': gamma})

    @classmethod
    def half_t(cls, nu):
        return cls('half-t', {'nu': nu})

    @classmethod
    def student_t(cls, nu):
        return cls('student-t', {'nu': nu})

    @classmethod
    def ar1(cls, phi, nu = 2.0, burn_in = _samplers.DEFAULT_BURN_IN):
        return cls('ar1', {'phi': phi, 'nu': nu}, burn_in)

    @classmethod
    def garch(cls, l0, l1, l2, nu = 6.0, burn_in = _samplers.DEFAULT_BURN_IN):
        return cls('garch', {'l0': l0, 'l1': l1, 'l2': l2, 'nu': nu}, burn_in)

    @classmethod
    def scale_het(cls, r, nu = 2.0):
        return cls('scale-het', {'r': r, 'nu': nu})

    @property
    def is_iid(self):
        return self.family in IID_FAMILIES

    @property
    def true_gamma(self) -> float:
        """extreme value index of the marginal distribution"""
        p = self.params
        if self.family in ('pareto', 'frechet'):
            return float(p['gamma'])
        if self.family == 'garch':
            return kesten_gamma(float(p['l1']), float(p['l2']), float(p['nu']))
        return 1.0/p['nu']

    @property
    def rho(self) -> float:
        """second order parameter of the tail quantile function, NaN if not tabulated"""
        if self.family == 'frechet':
            return -1.0
        if self.family == 'pareto':
            return -math.inf
        if self.family in ('half-t', 'student-t'):
            return -2.0/self.params['nu']
        return math.nan

    @property
    def rho_prime(self) -> float:
        """second order parameter of the block maxima quantile function, NaN if not tabulated"""
        if self.family == 'frechet':
            return -math.inf
        if self.family == 'pareto':
            return -1.0
        if self.family in ('half-t', 'student-t'):
            return -2.0/self.params['nu']
        return math.nan

    @property
    def extremal_index(self):
        """clustering of extremes: 1 for i.i.d. data, 1 - phi^4 for the AR(1)

        None where it is not known in closed form (GARCH, scale
        heterogeneity). Metadata only, nothing here estimates it.
        """
        if self.is_iid:
            return 1.0
        if self.family == 'ar1':
            return 1.0 - self.params['phi']**4
        return None

    def sample(self, n, rng) -> np.ndarray:
        """draw a series of length n from the stream rng"""
        if int(n) != n or n < 1:
            raise InvalidArgument(f'n must be a positive integer, got {n}')
        n = int(n)
        p = self.params
        if self.is_iid:
            return _samplers.sample_iid(self, n, rng)
        if self.family == 'ar1':
            return _samplers.ar1_series(p['phi'], n, burn_in=self.burn_in, nu=p['nu'], rng=rng)
        if self.family == 'garch':
            return _samplers.garch_series(
                p['l0'], p['l1'], p['l2'], n, nu=p['nu'], burn_in=self.burn_in, rng=rng
            )
        return _samplers.scale_het_series(p['r'], n, nu=p['nu'], rng=rng)

    def to_dict(self):
        """flat mapping used in experiment files"""
        d = {'dgp': self.family, **self.params}
        if not self.is_iid and self.family != 'scale-het':
            d['burn_in'] = self.burn_in
        return d

    @classmethod
    def from_dict(cls, d):
        """inverse of to_dict, with the family defaults filled in

        Keys other than 'dgp', 'burn_in' and the family parameters are
        ignored here; callers validating a whole file check them.
        """
        d = dict(d)
        family = d.get('dgp')
        if family not in FAMILIES:
            raise InvalidArgument(f'unknown family {family!r}, options are {list(FAMILIES)}')
        defaults = {
            'ar1': {'nu': 2.0},
            'garch': {'nu': 6.0},
            'scale-het': {'nu': 2.0},
        }.get(family, {})
        params = {
            name: d.get(name, defaults.get(name))
            for name in FAMILIES[family]
            if name in d or name in defaults
        }
        burn_in = 0 if family in IID_FAMILIES + ('scale-het',) else _samplers.DEFAULT_BURN_IN
        return cls(family, params, int(d.get('burn_in', burn_in)))
