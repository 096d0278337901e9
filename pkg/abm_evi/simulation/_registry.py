"""named experiments, one per simulation design"""

from ..distributions import DgpSpec
from ..errors import InvalidArgument
from ..estimators import Method
from ._experiment import ExperimentConfig, DEFAULT_K_GRID, FIG1_N_GRID


_K_GRID = DEFAULT_K_GRID


def experiment_registry():
    """every named experiment, name -> ExperimentConfig

    All run 100 replicates with c = 1e-3. The i.i.d. Student-t designs use
    the positive half of the distribution.
    """
    configs = [
        ExperimentConfig(
            dgp=DgpSpec.half_t(2), n_grid=FIG1_N_GRID, k_rule=rule,
            methods=(Method.ABM,), name=f'fig1-student-t2-{suffix}',
        )
        for suffix, rule in [('l13', 'n^1/3'), ('l12', 'n^1/2'), ('l23', 'n^2/3')]
    ]
    configs += [
        ExperimentConfig(dgp=DgpSpec.half_t(nu), n_grid=(1000,), k_grid=_K_GRID, name=f'fig3{panel}-student-t{nu}')
        for panel, nu in zip('abcd', [2, 3, 4, 5])
    ]
    configs += [
        ExperimentConfig(dgp=DgpSpec.frechet(0.5), n_grid=(1000,), k_grid=_K_GRID, name='fig6a-frechet'),
        ExperimentConfig(dgp=DgpSpec.pareto(0.5), n_grid=(1000,), k_grid=_K_GRID, name='fig6b-pareto'),
    ]
    configs += [
        ExperimentConfig(dgp=DgpSpec.ar1(phi), n_grid=(2000,), k_grid=_K_GRID, name=f'fig7-ar1-phi{tag}')
        for tag, phi in [('01', 0.1), ('05', 0.5), ('09', 0.9)]
    ]
    configs += [
        ExperimentConfig(dgp=DgpSpec.garch(0.5, 0.11, 0.88), n_grid=(2000,), k_grid=_K_GRID, name='fig8-garch-heavy'),
        ExperimentConfig(dgp=DgpSpec.garch(0.5, 0.08, 0.91), n_grid=(2000,), k_grid=_K_GRID, name='fig8-garch-light'),
    ]
    configs += [
        ExperimentConfig(dgp=DgpSpec.scale_het(r), n_grid=(1000,), k_grid=_K_GRID, name=f'fig9-scalehet-r{r}')
        for r in [2, 5]
    ]
    return {config.name: config for config in configs}


def get_experiment(name) -> ExperimentConfig:
    """look up a named experiment, listing the options if it does not exist"""
    registry = experiment_registry()
    if name not in registry:
        raise InvalidArgument(f'{name} is not one of the named experiments ({list(registry)})')
    return registry[name]
