"""run one estimator over a grid of k values"""

from dataclasses import dataclass
import logging


from ..errors import AbmEviError, InvalidArgument
from ._sample import Method, EstimateResult, as_finite_array, DEFAULT_C, DEFAULT_TOL
from ._block_maxima import abm_estimate, disjoint_bm_estimate, sliding_bm_estimate
from ._hill import hill_estimate


log = logging.getLogger(__name__)


_BLOCK_ESTIMATORS = {
    Method.ABM: abm_estimate,
    Method.DISJOINT_BM: disjoint_bm_estimate,
    Method.SLIDING_BM: sliding_bm_estimate,
}


def block_size_for(n, k):
    """block size m = floor(n/k) used when a method is indexed by k"""
    return n // k


def estimate(raw, method, *, m = None, k = None, c = DEFAULT_C, tol = DEFAULT_TOL) -> EstimateResult:
    """run the named estimator

    Block maxima methods take m, or k which is turned into m = floor(n/k).
    Hill takes k directly.

    Parameters
    ----------
    raw: np.array
        observations
    method: Method | str
        estimator, see Method for the accepted names
    m, k: int, optional
        exactly one of them
    c, tol: float, optional
        truncation constant and root tolerance for the likelihood methods
    """
    method = Method.parse(method)
    if (m is None) == (k is None):
        raise InvalidArgument('give exactly one of m and k')
    if method is Method.HILL:
        if k is None:
            raise InvalidArgument('the Hill estimator is indexed by k, not m')
        return hill_estimate(raw, k)
    if m is None:
        if int(k) != k or k < 1:
            raise InvalidArgument(f'k must be a positive integer, got {k}')
        m = block_size_for(len(raw), int(k))
        if m < 2:
            raise InvalidArgument(
                f'k={k} gives block size m={m} < 2 for n={len(raw)}'
            )
    return _BLOCK_ESTIMATORS[method](raw, m, c=c, tol=tol)


SWEEP_COLUMNS = (
    'method', 'k', 'm', 'k_effective', 'gamma_hat', 'sigma_hat',
    'iterations', 'residual', 'error',
)


@dataclass(frozen=True)
class SweepRow:
    """one grid point of a sweep, holding either a result or the error

    Attributes
    ----------
    method: Method
    k: int
    m: int | None
        block size used, None for Hill
    result: EstimateResult | None
    error: str | None
        '<ExceptionName>: message' when the estimate failed
    """

    method: Method
    k: int
    m: int
    result: EstimateResult = None
    error: str = None

    @property
    def ok(self):
        return self.error is None

    def to_row(self):
        """flat dict with the columns of SWEEP_COLUMNS"""
        result = {} if self.result is None else self.result.to_row()
        row = {column: result.get(column) for column in SWEEP_COLUMNS}
        row.update(method=self.method.value, k=self.k, m=self.m, error=self.error)
        return row


def k_sweep(raw, method, k_grid, *, c = DEFAULT_C, tol = DEFAULT_TOL):
    """estimate at each k of the grid without stopping at failures

    For block maxima methods m = floor(n/k); a grid point that gives m < 2
    becomes an error row. Any AbmEviError raised by an estimate is caught
    and stored in its row.

    Returns
    -------
    list[SweepRow]
        in the order of k_grid
    """
    method = Method.parse(method)
    values = as_finite_array(raw)
    k_grid = [int(k) for k in k_grid]
    if len(set(k_grid)) != len(k_grid):
        raise InvalidArgument('k_grid entries must be distinct')
    if any(k < 1 for k in k_grid):
        raise InvalidArgument('k_grid entries must be >= 1')
    rows = []
    for k in k_grid:
        m = None if method is Method.HILL else block_size_for(len(values), k)
        try:
            result = estimate(values, method, k=k, c=c, tol=tol)
        except AbmEviError as e:
            log.debug('%s failed at k=%d: %s', method.label, k, e)
            rows.append(SweepRow(method=method, k=k, m=m, error=f'{type(e).__name__}: {e}'))
        else:
            rows.append(SweepRow(method=method, k=k, m=m, result=result))
    return rows
