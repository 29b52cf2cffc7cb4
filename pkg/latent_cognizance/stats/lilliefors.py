"""
Lilliefors test for normality with estimated mean and variance.

The statistic is the Kolmogorov-Smirnov distance between the empirical CDF and the CDF of a normal distribution
fitted to the sample. Its null distribution does not depend on the unknown parameters, so p-values come from
simulating standard normal samples of the same size and fitting each one the same way.
"""
from functools import lru_cache
from typing import Iterable, Optional, Union

import numpy as np
from scipy.special import ndtr

from .data import TestMethod, TestResult
from ..shared.data import InvalidInputError

DEFAULT_SIMULATIONS = 10000
DEFAULT_SEED = 0
MIN_SAMPLE_SIZE = 5
_CHUNK_SIZE = 1000


def _statistics(samples: np.ndarray) -> np.ndarray:
    """
    @param samples: An MxN matrix of M samples of size N.
    @return: The M Lilliefors statistics.
    """
    n = samples.shape[1]
    ordered = np.sort(samples, axis=1)
    mean = ordered.mean(axis=1, keepdims=True)
    sd = ordered.std(axis=1, ddof=1, keepdims=True)
    cdf = ndtr((ordered - mean) / sd)
    upper = np.arange(1, n + 1) / n
    lower = np.arange(0, n) / n
    return np.maximum(np.max(upper - cdf, axis=1), np.max(cdf - lower, axis=1))


def lilliefors_statistic(xs: Iterable[float]) -> float:
    x = np.asarray(list(xs), dtype=np.float64)
    if len(x) < MIN_SAMPLE_SIZE:
        raise InvalidInputError(f'Lilliefors test needs at least {MIN_SAMPLE_SIZE} values (got {len(x)})')
    if not np.all(np.isfinite(x)):
        raise InvalidInputError('Lilliefors test sample contains non-finite values')
    if np.ptp(x) == 0.0:
        raise InvalidInputError('Lilliefors test sample has zero variance')
    return float(_statistics(x[np.newaxis, :])[0])


def simulate_lilliefors_null(n: int, n_simulations: int, rng: np.random.Generator) -> np.ndarray:
    """
    Simulates the null distribution of the statistic for samples of size `n`.

    @return: The sorted simulated statistics.
    """
    statistics = []
    remaining = n_simulations
    while remaining > 0:
        size = min(remaining, _CHUNK_SIZE)
        statistics.append(_statistics(rng.standard_normal((size, n))))
        remaining -= size
    return np.sort(np.concatenate(statistics))


@lru_cache(maxsize=32)
def _seeded_null(n: int, n_simulations: int, seed: int) -> np.ndarray:
    null = simulate_lilliefors_null(n, n_simulations, np.random.default_rng(seed))
    null.setflags(write=False)
    return null


def lilliefors(xs: Iterable[float],
               alpha: float = 0.05,
               rng: Union[int, np.random.Generator, None] = None,
               n_simulations: int = DEFAULT_SIMULATIONS,
               null_distribution: Optional[np.ndarray] = None) -> TestResult:
    """
    @param xs: The sample (at least 5 values, not all equal).
    @param alpha: The significance level, recorded on the result; `result.rejected` is the verdict at that level.
    @param rng: A seed or a generator for the Monte Carlo simulation. Seeded nulls are cached per (n, simulations,
    seed). Defaults to seed 0.
    @param n_simulations: The number of simulated samples.
    @param null_distribution: Previously simulated statistics for this sample size; skips the simulation.
    @return: The test result. `seed` is recorded when the simulation was seeded by an integer.
    """
    if not 0.0 < alpha < 1.0:
        raise InvalidInputError(f'Significance level must be in (0, 1) (got {alpha})')
    x = np.asarray(list(xs), dtype=np.float64)
    statistic = lilliefors_statistic(x)
    n = len(x)
    seed = None
    if null_distribution is not None:
        null_distribution = np.sort(null_distribution)
    else:
        if rng is None:
            rng = DEFAULT_SEED
        if isinstance(rng, (int, np.integer)):
            seed = int(rng)
            null_distribution = _seeded_null(n, n_simulations, seed)
        else:
            null_distribution = simulate_lilliefors_null(n, n_simulations, rng)
    exceed = len(null_distribution) - np.searchsorted(null_distribution, statistic, side='left')
    p_value = (1.0 + exceed) / (1.0 + len(null_distribution))
    return TestResult(statistic, float(p_value), TestMethod.MONTE_CARLO, n, seed=seed, alpha=alpha)
