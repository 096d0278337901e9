"""seeded Monte-Carlo experiments

An experiment runs the chosen estimators on reps simulated series and
summarises bias, variance and MSE for every (method, n, k) cell.

    from abm_evi import simulation, distributions
    config = simulation.ExperimentConfig(
        dgp = distributions.DgpSpec.half_t(2),
        n_grid = [1000],
        k_grid = range(10, 201, 10),
        methods = ['abm', 'bm'],
        reps = 100,
        base_seed = 0,
    )
    summary = simulation.run_experiment(config)
    summary.cell('abm', 1000, 50).mse

The standard designs are available by name.

    simulation.get_experiment('fig3a-student-t2')
    simulation.implied_asymptotic_variance_experiment(1/3, reps = 200)
"""

from ._summary import population_moments, McCell, McSummary, SUMMARY_COLUMNS
from ._k_rules import K_RULES, power_rule, rule_name, k_for
from ._experiment import (
    ExperimentConfig,
    DEFAULT_K_GRID,
    DEFAULT_METHODS,
    DEFAULT_REPS,
    FIG1_N_GRID,
    THREADS_VARIABLE,
    resolve_threads,
    run_experiment,
    implied_asymptotic_variance_experiment,
    single_sample_path,
)
from ._registry import experiment_registry, get_experiment
