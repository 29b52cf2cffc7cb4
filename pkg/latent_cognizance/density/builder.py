from typing import Dict, List, Sequence

from .boxplot import boxplot_summary
from .data import DensityReport, GroupMode
from .kde import DEFAULT_GRID_SIZE, kde
from ..evaluation.data import ScoredSample
from ..shared.data import InvalidInputError, OutcomeGroup

SIGN_LABEL = 'SS'


def group_label(group: OutcomeGroup, mode: GroupMode) -> str:
    if mode is GroupMode.SS_VS_NS and group is not OutcomeGroup.NS:
        return SIGN_LABEL
    return str(group)


def group_raw_scores(samples: Sequence[ScoredSample], mode: GroupMode) -> Dict[str, List[float]]:
    """
    Collects raw scores per plotted group, in a fixed group order. Groups without samples are left out.
    """
    labels = [SIGN_LABEL, str(OutcomeGroup.NS)] if mode is GroupMode.SS_VS_NS else [str(g) for g in OutcomeGroup]
    groups: Dict[str, List[float]] = {label: [] for label in labels}
    for sample in samples:
        groups[group_label(sample.group, mode)].append(sample.raw_score)
    return {label: scores for label, scores in groups.items() if len(scores) > 0}


def build_density_report(samples: Sequence[ScoredSample],
                         scorer_name: str,
                         mode: GroupMode = GroupMode.SS_VS_NS,
                         log10_scale: bool = False,
                         grid_size: int = DEFAULT_GRID_SIZE) -> DensityReport:
    """
    Density curves and boxplot summaries of one scorer's raw values per group.

    Every non-empty group gets a boxplot summary. A group that cannot be smoothed (fewer than two values or no
    spread) gets a warning instead of a curve.
    """
    report = DensityReport(scorer_name, mode, log10_scale)
    for label, scores in group_raw_scores(samples, mode).items():
        report.boxplots[label] = boxplot_summary(scores)
        try:
            report.curves[label] = kde(scores, grid_size, log10_scale)
        except InvalidInputError as e:
            if log10_scale and any(value <= 0.0 for value in scores):
                raise InvalidInputError(f'{scorer_name}: cannot plot {label} on a log scale: {e}') from e
            report.warnings.append(f'{scorer_name}: no density curve for {label}: {e}')
    return report
