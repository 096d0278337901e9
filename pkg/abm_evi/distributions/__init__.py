"""data generating processes used by the simulations

Every design is a DgpSpec that knows its true extreme value index and
draws series from an explicit numpy Generator.

    from abm_evi import distributions
    rng = distributions.make_stream(1, 0)
    spec = distributions.DgpSpec.ar1(phi = 0.5)
    x = spec.sample(2000, rng)      # 2100 drawn, first 100 discarded
    spec.true_gamma                 # 0.5, inherited from the t(2) innovations

The GARCH(1,1) index comes from the Kesten equation and is computed by
quadrature, which takes a moment the first time for each parameter set.

    distributions.kesten_gamma(0.11, 0.88, 6)   # about 0.35
"""

from ._dgp import DgpSpec, FAMILIES, IID_FAMILIES
from ._samplers import (
    DEFAULT_BURN_IN,
    make_stream,
    pareto_quantile,
    frechet_quantile,
    student_t,
    unit_variance_scale,
    sample_iid,
    ar1_filter,
    ar1_series,
    garch_filter,
    garch_series,
    scale_het_series,
)
from ._kesten import kesten_gamma
