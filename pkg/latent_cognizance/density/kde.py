from typing import Iterable

import numpy as np
from scipy.stats import gaussian_kde

from .data import DensityCurve
from ..shared.data import InvalidInputError

DEFAULT_GRID_SIZE = 512
# Grid margin beyond the data range, in bandwidths.
GRID_CUT = 3.0


def _as_sample(xs: Iterable[float], log10_scale: bool) -> np.ndarray:
    x = np.asarray(list(xs), dtype=np.float64)
    if not np.all(np.isfinite(x)):
        raise InvalidInputError('Density sample contains non-finite values')
    if log10_scale:
        if np.any(x <= 0.0):
            raise InvalidInputError('Log-scale density needs strictly positive values')
        x = np.log10(x)
    return x


def silverman_bandwidth(xs: Iterable[float]) -> float:
    """
    0.9 * min(sd, IQR / 1.34) * n^(-1/5), falling back to the standard deviation when the IQR is zero.
    """
    x = np.asarray(list(xs), dtype=np.float64)
    sd = float(np.std(x, ddof=1))
    q75, q25 = np.percentile(x, [75, 25])
    spread = min(sd, (q75 - q25) / 1.34)
    if spread <= 0.0:
        spread = sd
    return 0.9 * spread * len(x) ** -0.2


def kde(xs: Iterable[float], grid_size: int = DEFAULT_GRID_SIZE, log10_scale: bool = False) -> DensityCurve:
    """
    Gaussian kernel density estimate on an evenly spaced grid spanning [min - 3h, max + 3h].

    @param xs: The sample (at least 2 values, non-zero variance).
    @param grid_size: The number of grid points.
    @param log10_scale: Estimate the density of log10(x) instead (all values must be positive).
    @return: The density curve.
    """
    x = _as_sample(xs, log10_scale)
    if len(x) < 2:
        raise InvalidInputError(f'Density estimation needs at least 2 values (got {len(x)})')
    if grid_size < 2:
        raise InvalidInputError(f'Density grid needs at least 2 points (got {grid_size})')
    sd = float(np.std(x, ddof=1))
    if sd == 0.0:
        raise InvalidInputError('Density sample has zero variance')
    bandwidth = silverman_bandwidth(x)
    grid = np.linspace(x.min() - GRID_CUT * bandwidth, x.max() + GRID_CUT * bandwidth, grid_size)
    # gaussian_kde scales its kernel by the sample standard deviation.
    estimator = gaussian_kde(x, bw_method=bandwidth / sd)
    return DensityCurve(grid, estimator(grid), bandwidth, len(x), log10_scale)
