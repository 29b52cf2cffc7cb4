import math
from typing import Iterable, Optional

import numpy as np
from scipy.special import ndtr
from scipy.stats import rankdata

from .data import TestMethod, TestResult
from ..shared.data import InvalidInputError

# Combined sample sizes up to this use the exact permutation distribution.
EXACT_MAX_TOTAL = 16


def _as_sample(values: Iterable[float], name: str) -> np.ndarray:
    sample = np.asarray(list(values), dtype=np.float64)
    if len(sample) == 0:
        raise InvalidInputError(f'Wilcoxon rank-sum test needs a non-empty {name} sample')
    if not np.all(np.isfinite(sample)):
        raise InvalidInputError(f'The {name} sample contains non-finite values')
    return sample


def _rank_sum_distribution(doubled_ranks: np.ndarray, n1: int) -> np.ndarray:
    """
    Counts, for every value s, how many n1-subsets of `doubled_ranks` sum to s.
    """
    max_sum = int(doubled_ranks.sum())
    counts = np.zeros((n1 + 1, max_sum + 1), dtype=np.int64)
    counts[0, 0] = 1
    for i, rank in enumerate(doubled_ranks):
        rank = int(rank)
        for c in range(min(i + 1, n1), 0, -1):
            counts[c, rank:] += counts[c - 1, :max_sum + 1 - rank]
    return counts[n1]


def _exact_p_value(ranks: np.ndarray, n1: int) -> float:
    # Mid-ranks are multiples of 1/2, so doubling them keeps all arithmetic in integers.
    doubled = np.rint(ranks * 2).astype(np.int64)
    n = len(ranks)
    observed = int(doubled[:n1].sum())
    expected = n1 * (n + 1)
    distribution = _rank_sum_distribution(doubled, n1)
    sums = np.arange(len(distribution))
    extreme = np.abs(sums - expected) >= abs(observed - expected)
    return int(distribution[extreme].sum()) / math.comb(n, n1)


def _normal_p_value(ranks: np.ndarray, u: float, n1: int, n2: int) -> float:
    n = n1 + n2
    _, tie_counts = np.unique(ranks, return_counts=True)
    tie_term = float(np.sum(tie_counts ** 3 - tie_counts))
    variance = n1 * n2 / 12.0 * ((n + 1) - tie_term / (n * (n - 1)))
    if variance <= 0.0:
        return 1.0
    deviation = max(abs(u - n1 * n2 / 2.0) - 0.5, 0.0)
    z = deviation / math.sqrt(variance)
    return min(1.0, 2.0 * float(ndtr(-z)))


def wilcoxon_rank_sum(xs: Iterable[float], ys: Iterable[float], exact: Optional[bool] = None) -> TestResult:
    """
    Two-sided Wilcoxon rank-sum (Mann-Whitney) test.

    The statistic is U for `xs`: the number of (x, y) pairs with x > y, ties counting one half. When
    n1 + n2 <= 16 the p-value comes from the exact permutation distribution of the mid-rank sum (ties included);
    otherwise from the normal approximation with tie and continuity corrections.

    @param exact: Force (True) or forbid (False) the exact distribution instead of choosing by sample size.
    """
    x = _as_sample(xs, 'first')
    y = _as_sample(ys, 'second')
    n1, n2 = len(x), len(y)
    ranks = rankdata(np.concatenate([x, y]))
    u = float(ranks[:n1].sum() - n1 * (n1 + 1) / 2.0)
    if exact is None:
        exact = n1 + n2 <= EXACT_MAX_TOTAL
    if exact:
        return TestResult(u, _exact_p_value(ranks, n1), TestMethod.EXACT, n1, n2)
    return TestResult(u, _normal_p_value(ranks, u, n1, n2), TestMethod.NORMAL_APPROX, n1, n2)
