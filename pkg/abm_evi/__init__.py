"""all block maxima estimation of a positive extreme value index

Subpackages
-----------
weights
    probability weights of the order statistics
estimators
    all block maxima, disjoint and sliding block maxima, Hill
distributions
    data generating processes used in the simulations
asymptotics
    limit covariance and its Monte-Carlo check
simulation
    seeded experiments and the named designs
cli_io
    command line, experiment files and result tables
"""

__version__ = '0.1.0'

from . import weights
from . import estimators
from . import distributions
from . import simulation
from . import asymptotics
