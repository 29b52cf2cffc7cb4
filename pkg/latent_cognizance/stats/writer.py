from typing import Sequence, Tuple

from .data import GroupComparison
from ..shared.data import OutcomeGroup
from ..shared.helpers import write_csv

COMPARISON_HEADER = ['scorer', 'comparison', 'statistic', 'p_value', 'method', 'n1', 'n2', 'alpha', 'significant',
                     'scope']
NORMALITY_HEADER = ['scorer', 'group', 'statistic', 'p_value', 'method', 'n', 'seed', 'alpha', 'non_normal', 'scope']

# (scope label, comparison) pairs; the scope is `all` or `fold N`.
ScopedComparison = Tuple[str, GroupComparison]


def write_comparison_csv(path: str, comparisons: Sequence[ScopedComparison]):
    rows = []
    for scope, comparison in comparisons:
        for (first, second), result in comparison.comparisons.items():
            rows.append([
                comparison.spec.name, f'{first}-{second}', result.statistic, result.p_value, str(result.method),
                result.n1, result.n2, result.alpha, result.rejected, scope,
            ])
    write_csv(path, COMPARISON_HEADER, rows)


def write_normality_csv(path: str, comparisons: Sequence[ScopedComparison]):
    rows = []
    for scope, comparison in comparisons:
        for group in OutcomeGroup:
            result = comparison.normality.get(group)
            if result is None:
                rows.append([comparison.spec.name, str(group), None, None, None, None, None, None, None, scope])
                continue
            rows.append([
                comparison.spec.name, str(group), result.statistic, result.p_value, str(result.method), result.n1,
                result.seed, result.alpha, result.rejected, scope,
            ])
    write_csv(path, NORMALITY_HEADER, rows)
