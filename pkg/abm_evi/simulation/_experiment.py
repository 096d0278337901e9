"""seeded Monte-Carlo experiments over (method, n, k) cells"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging
import os
import warnings


import numpy as np


from ..errors import AbmEviError, ConfigError, InvalidArgument
from ..distributions import DgpSpec, FAMILIES, make_stream
from ..estimators import Method, DEFAULT_C, estimate, block_size_for, k_sweep
from ._k_rules import K_RULES, k_for, rule_name
from ._summary import McCell, McSummary


log = logging.getLogger(__name__)


DEFAULT_K_GRID = tuple(range(10, 201, 10))
DEFAULT_METHODS = (Method.ABM, Method.DISJOINT_BM)
DEFAULT_REPS = 100
THREADS_VARIABLE = 'ABM_EVI_THREADS'


def resolve_threads(threads = None):
    """number of worker threads: the argument, else ABM_EVI_THREADS, else the CPU count"""
    if threads is None:
        raw = os.environ.get(THREADS_VARIABLE)
        if raw is None:
            return os.cpu_count() or 1
        try:
            threads = int(raw)
        except ValueError:
            raise InvalidArgument(f'{THREADS_VARIABLE} must be an integer, got {raw!r}') from None
    if int(threads) != threads or threads < 1:
        raise InvalidArgument(f'threads must be a positive integer, got {threads}')
    return int(threads)


def _default_sampler(dgp, n, rng):
    return dgp.sample(n, rng)


@dataclass(frozen=True)
class ExperimentConfig:
    """a complete, reproducible description of a simulation

    Exactly one of k_grid and k_rule picks the number of blocks. With
    nested (the default) each replicate draws one series of the largest n
    and every smaller n uses its leading part; otherwise every n gets a
    fresh series. Scale heterogeneity always draws fresh series since a
    prefix would not keep the two halves.

    Attributes
    ----------
    dgp: DgpSpec
    n_grid: tuple[int]
    k_grid: tuple[int] | None
    k_rule: str | None
        one of K_RULES
    methods: tuple[Method]
    reps: int
    c: float
        truncation constant of the likelihood methods
    base_seed: int
    nested: bool
    name: str | None
        registry name, informational
    """

    dgp: DgpSpec
    n_grid: tuple
    k_grid: tuple = None
    k_rule: str = None
    methods: tuple = DEFAULT_METHODS
    reps: int = DEFAULT_REPS
    c: float = DEFAULT_C
    base_seed: int = 0
    nested: bool = True
    name: str = None

    def __post_init__(self):
        def _set(attr, value):
            object.__setattr__(self, attr, value)

        if not isinstance(self.dgp, DgpSpec):
            raise ConfigError(f'dgp must be a DgpSpec, got {self.dgp!r}', field='dgp')
        n_grid = tuple(np.atleast_1d(self.n_grid).tolist())
        if not n_grid or any(int(n) != n or n < 2 for n in n_grid):
            raise ConfigError(f'n must be a nonempty list of integers >= 2, got {self.n_grid}', field='n')
        _set('n_grid', tuple(int(n) for n in n_grid))
        if (self.k_grid is None) == (self.k_rule is None):
            raise ConfigError('give exactly one of a k grid and a k rule', field='k')
        if self.k_rule is not None and self.k_rule not in K_RULES:
            raise ConfigError(f'{self.k_rule} is not one of the k rules ({list(K_RULES)})', field='k')
        if self.k_grid is not None:
            k_grid = tuple(np.atleast_1d(self.k_grid).tolist())
            if not k_grid or any(int(k) != k or k < 1 for k in k_grid):
                raise ConfigError(f'k must be a nonempty list of positive integers, got {self.k_grid}', field='k')
            if len(set(k_grid)) != len(k_grid):
                raise ConfigError(f'k grid entries must be distinct, got {self.k_grid}', field='k')
            _set('k_grid', tuple(int(k) for k in k_grid))
        try:
            methods = tuple(Method.parse(m) for m in self.methods)
        except InvalidArgument as e:
            raise ConfigError(str(e), field='methods') from None
        if not methods or len(set(methods)) != len(methods):
            raise ConfigError(f'methods must be nonempty and distinct, got {self.methods}', field='methods')
        _set('methods', methods)
        if int(self.reps) != self.reps or self.reps < 1:
            raise ConfigError(f'reps must be a positive integer, got {self.reps}', field='reps')
        _set('reps', int(self.reps))
        if not (np.isfinite(self.c) and self.c > 0):
            raise ConfigError(f'c must be positive, got {self.c}', field='c')
        if int(self.base_seed) != self.base_seed or self.base_seed < 0:
            raise ConfigError(f'seed must be a non-negative integer, got {self.base_seed}', field='seed')
        _set('base_seed', int(self.base_seed))
        if not isinstance(self.nested, (bool, np.bool_)):
            raise ConfigError(f'nested must be true or false, got {self.nested!r}', field='nested')
        _set('nested', bool(self.nested))
        if self.dgp.family == 'scale-het' and any(n % 2 for n in self.n_grid):
            raise ConfigError(f'scale heterogeneity needs even n, got {self.n_grid}', field='n')
        for n in self.n_grid:
            for k in self.k_values(n):
                if Method.HILL in self.methods and not k <= n - 1:
                    raise ConfigError(f'Hill needs k <= n-1, got k={k} at n={n}', field='k')
                if any(m is not Method.HILL for m in self.methods) and block_size_for(n, k) < 2:
                    raise ConfigError(
                        f'k={k} gives block size m={block_size_for(n, k)} < 2 at n={n}', field='k'
                    )

    def k_values(self, n):
        """numbers of blocks evaluated at sample size n"""
        if self.k_rule is not None:
            return (k_for(self.k_rule, n),)
        return self.k_grid

    @property
    def draws_prefixes(self):
        return self.nested and self.dgp.family != 'scale-het'

    def to_dict(self):
        """flat mapping in the experiment file schema"""
        d = self.dgp.to_dict()
        d.update(
            n=list(self.n_grid),
            k=self.k_rule if self.k_rule is not None else list(self.k_grid),
            methods=[m.value for m in self.methods],
            reps=self.reps,
            c=self.c,
            seed=self.base_seed,
            nested=self.nested,
        )
        if self.name is not None:
            d['name'] = self.name
        return d

    @classmethod
    def from_dict(cls, d):
        """validate a flat mapping and fill in the defaults

        Raises
        ------
        ConfigError
            naming the offending field, or listing the unknown keys
        """
        d = dict(d)
        family = d.get('dgp')
        if family not in FAMILIES:
            raise ConfigError(f'unknown dgp {family!r}, options are {list(FAMILIES)}', field='dgp')
        known = {'dgp', 'n', 'k', 'methods', 'reps', 'c', 'seed', 'nested', 'name', 'burn_in'}
        known.update(FAMILIES[family])
        unknown = sorted(set(d) - known)
        if unknown:
            raise ConfigError(f'unknown keys {unknown}', field=unknown)
        if 'n' not in d:
            raise ConfigError('the sample size n is required', field='n')
        if family == 'garch' and 'l1' in d and 'l2' in d and not d['l1'] + d['l2'] < 1:
            raise ConfigError(
                f'GARCH stationarity requires l1 + l2 < 1, got {d["l1"]} + {d["l2"]}',
                field='stationarity',
            )
        if family == 'ar1' and 'phi' in d and not -1 < d['phi'] < 1:
            raise ConfigError(f'AR(1) coefficient must satisfy |phi| < 1, got {d["phi"]}', field='phi')
        try:
            dgp = DgpSpec.from_dict(d)
        except InvalidArgument as e:
            raise ConfigError(str(e), field='dgp') from None
        k = d.get('k', list(DEFAULT_K_GRID))
        return cls(
            dgp=dgp,
            n_grid=d['n'],
            k_grid=None if isinstance(k, str) else k,
            k_rule=k if isinstance(k, str) else None,
            methods=tuple(d.get('methods', [m.value for m in DEFAULT_METHODS])),
            reps=d.get('reps', DEFAULT_REPS),
            c=d.get('c', DEFAULT_C),
            base_seed=d.get('seed', 0),
            nested=d.get('nested', True),
            name=d.get('name'),
        )


def _cells(config):
    """(n, method, k, m) of every cell, in output order"""
    return [
        (n, method, k, None if method is Method.HILL else block_size_for(n, k))
        for n in config.n_grid
        for method in config.methods
        for k in config.k_values(n)
    ]


def _replicate(config, r, cells, sampler):
    """estimates of every cell on the series of replicate r, NaN where the fit failed"""
    if config.draws_prefixes:
        full = sampler(config.dgp, max(config.n_grid), make_stream(config.base_seed, r))
        series = {n: full[:n] for n in config.n_grid}
    else:
        series = {
            n: sampler(config.dgp, n, make_stream(config.base_seed, r, n))
            for n in config.n_grid
        }
    estimates = np.full(len(cells), np.nan)
    for i, (n, method, k, _) in enumerate(cells):
        try:
            estimates[i] = estimate(series[n], method, k=k, c=config.c).gamma_hat
        except AbmEviError as e:
            log.debug('replicate %d %s n=%d k=%d failed: %s', r, method.label, n, k, e)
    return estimates


def run_experiment(config, *, threads = None, sampler = None) -> McSummary:
    """run every replicate of the experiment and summarise each cell

    Replicate r draws from make_stream(base_seed, r) (or
    make_stream(base_seed, r, n) without nesting) and all cells of that
    replicate see the same series. Replicates are spread over threads and
    collected in replicate order so the summary is the same for any number
    of threads. Failed fits are left out of the statistics and counted; a
    cell where more than half of them failed is marked invalid with a
    warning.

    Parameters
    ----------
    config: ExperimentConfig
    threads: int, optional
        worker threads, see resolve_threads
    sampler: Callable, optional
        sampler(dgp, n, rng) returning the series, defaults to dgp.sample

    Returns
    -------
    McSummary
    """
    threads = resolve_threads(threads)
    sampler = sampler or _default_sampler
    cells = _cells(config)
    true_gamma = config.dgp.true_gamma
    log.info(
        'experiment %s: %d reps, %d cells on %d threads',
        config.name or config.dgp.family, config.reps, len(cells), threads
    )
    with ThreadPoolExecutor(max_workers=threads) as pool:
        estimates = np.array(list(pool.map(
            lambda r: _replicate(config, r, cells, sampler),
            range(config.reps),
        ))).reshape(config.reps, len(cells))
    summaries = []
    for (n, method, k, m), column in zip(cells, estimates.T):
        cell = McCell.from_estimates(
            column, method=method.value, n=n, k=k, m=m, true_gamma=true_gamma,
        )
        if not cell.valid:
            warnings.warn(
                f'{method.label} at n={n} k={k} failed in {cell.reps_failed} of'
                f' {config.reps} replicates and is reported as invalid'
            )
        summaries.append(cell)
    log.info('experiment %s done', config.name or config.dgp.family)
    return McSummary(config=config, cells=tuple(summaries))


FIG1_N_GRID = (500, 1000, 2000, 5000, 10000)


def implied_asymptotic_variance_experiment(l, n_grid = FIG1_N_GRID, reps = DEFAULT_REPS, seed = 0, *, nested = True, threads = None):
    """implied asymptotic variance k Var(gamma_hat)/gamma^2 of the ABM estimator

    The data are the positive half of Student-t(2) samples (gamma = 1/2),
    with k = round(n^l). Each replicate uses prefixes of one series of the
    largest n, or a fresh series for every n when nested is False.

    Parameters
    ----------
    l: float | str
        1/3, 1/2 or 2/3, or the rule name 'n^1/3' etc.
    n_grid: list[int]
    reps: int
    seed: int
    nested: bool, optional

    Returns
    -------
    list[dict]
        one row per n with n, k, implied_asym_var and reps_succeeded
    """
    config = ExperimentConfig(
        dgp=DgpSpec.half_t(2),
        n_grid=n_grid,
        k_rule=rule_name(l),
        methods=(Method.ABM,),
        reps=reps,
        base_seed=seed,
        nested=nested,
    )
    summary = run_experiment(config, threads=threads)
    return [
        {
            'n': cell.n,
            'k': cell.k,
            'implied_asym_var': cell.implied_asym_var,
            'reps_succeeded': cell.reps_succeeded,
        }
        for cell in summary.cells
    ]


def single_sample_path(dgp, n, k_grid, methods = DEFAULT_METHODS, seed = 0, *, c = DEFAULT_C):
    """estimate paths over k on one seeded sample

    The sample is the one replicate 0 of run_experiment would draw with
    the same seed.

    Returns
    -------
    dict[Method, list[SweepRow]]
        path of each method in the order of k_grid
    """
    x = dgp.sample(n, make_stream(seed, 0))
    return {
        method: k_sweep(x, method, k_grid, c=c)
        for method in (Method.parse(m) for m in methods)
    }
