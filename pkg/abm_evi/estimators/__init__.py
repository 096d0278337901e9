"""estimators of a positive extreme value index

Four estimators share one interface returning an EstimateResult:

    from abm_evi import estimators
    estimators.abm_estimate(x, m = 100)            # all block maxima
    estimators.disjoint_bm_estimate(x, m = 100)    # disjoint blocks
    estimators.sliding_bm_estimate(x, m = 100)     # sliding blocks
    estimators.hill_estimate(x, k = 100)

The three block maxima methods left-truncate at c (default 1e-3) and fit
a Frechet distribution by weighted maximum likelihood. The building blocks
are available directly.

    estimators.psi(0.5, values, weights)
    gamma_hat, sigma_hat, diagnostics = estimators.fit_frechet_wml(values, weights)

A sweep over the number of blocks k (m = floor(n/k)) keeps going past
failed fits and records them.

    for row in estimators.k_sweep(x, 'abm', range(10, 200, 10)):
        print(row.k, row.result.gamma_hat if row.ok else row.error)
"""

from ._sample import (
    Method,
    SortedTruncatedSample,
    SolverDiagnostics,
    EstimateResult,
    DEFAULT_C,
    DEFAULT_TOL,
)
from ._frechet import psi, fit_frechet_wml
from ._block_maxima import (
    abm_estimate,
    disjoint_bm_estimate,
    sliding_bm_estimate,
    disjoint_maxima,
    sliding_maxima,
)
from ._hill import hill_estimate
from ._sweep import estimate, k_sweep, SweepRow, SWEEP_COLUMNS, block_size_for
