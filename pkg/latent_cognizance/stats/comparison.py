from typing import Dict, List, Sequence

from .data import GROUP_PAIRS, GroupComparison
from .lilliefors import DEFAULT_SEED, MIN_SAMPLE_SIZE, lilliefors
from .wilcoxon import wilcoxon_rank_sum
from ..evaluation.data import ScoredSample
from ..scores.data import ScorerSpec
from ..shared.data import DegenerateEvaluationError, InvalidInputError, OutcomeGroup


def _scores_by_group(samples: Sequence[ScoredSample]) -> Dict[OutcomeGroup, List[float]]:
    groups = {group: [] for group in OutcomeGroup}
    for sample in samples:
        groups[sample.group].append(sample.oriented_score)
    return groups


def group_comparison(samples: Sequence[ScoredSample],
                     spec: ScorerSpec,
                     alpha: float = 0.01,
                     normality_alpha: float = 0.05,
                     seed: int = DEFAULT_SEED) -> GroupComparison:
    """
    Tests whether a scorer separates correctly predicted (CP), misclassified (IP) and non-sign (NS) samples:
    a two-sided Wilcoxon rank-sum test for each of CP-IP, CP-NS and IP-NS on the oriented scores, preceded by a
    Lilliefors normality check of every group.

    Groups too small (or too uniform) for the normality check get no normality result and a warning instead.
    """
    groups = _scores_by_group(samples)
    for group in OutcomeGroup:
        if len(groups[group]) == 0:
            raise DegenerateEvaluationError(
                f'Cannot compare groups for {spec.name}: the {group} group is empty')

    comparison = GroupComparison(spec, alpha, normality_alpha)
    for group in OutcomeGroup:
        try:
            comparison.normality[group] = lilliefors(groups[group], normality_alpha, rng=seed)
        except InvalidInputError as e:
            comparison.normality[group] = None
            comparison.warnings.append(
                f'{spec.name}: normality check skipped for {group} (needs {MIN_SAMPLE_SIZE}+ distinct values): {e}')

    for first, second in GROUP_PAIRS:
        result = wilcoxon_rank_sum(groups[first], groups[second])
        comparison.comparisons[(first, second)] = result._replace(alpha=alpha)
    return comparison
