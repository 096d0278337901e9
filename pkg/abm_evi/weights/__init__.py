"""weights attached to the order statistics by the all block maxima method

The i-th largest observation of a sample of size n is the maximum of
C(n-i, m-1) of the C(n, m) blocks of size m. Dividing gives a probability
weight for each of the top n-m+1 order statistics.

    from abm_evi import weights
    p = weights.abm_weights(1000, 10)
    p.values[0]  # == 10/1000

The exponential weights q_i = exp(-(i-1)/k)/k with k = n/m are the
continuous-time picture of the same thing and approximate p uniformly over
the first k (log k)^d indices.

    weights.weight_approximation_error(10_000, 100, d = 1)
"""

from ._binomial import (
    WeightVector,
    UNDERFLOW_FLOOR,
    abm_weights,
    exp_weights,
    weight_approximation_error,
)
