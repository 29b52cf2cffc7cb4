from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .data import CurveReport, EvaluationResult, FoldMode, MetricSummary, PositiveDefinition, ScoredSample
from ..scores.data import ScorerSpec
from ..shared.helpers import write_csv
from ..shared.plotting import new_figure, save_svg

CURVE_HEADER = ['threshold', 'detection_rate', 'false_alarm_rate', 'precision', 'recall']
SUMMARY_HEADER = ['scorer', 'positive', 'auroc', 'aupr', 'n_pos', 'n_neg', 'fold_mode', 'auroc_std', 'aupr_std']
SCORED_HEADER = ['sample_id', 'group', 'raw', 'oriented', 'flags']

# Rows of the summary table: the AUC row reads the PR area under wrong_or_novel, the ROC row reads the
# DR-FAR area under novel_only.
TABLE_ROWS = [
    ('AUC', PositiveDefinition.WRONG_OR_NOVEL, 'aupr'),
    ('ROC', PositiveDefinition.NOVEL_ONLY, 'auroc'),
]

ScorerSummary = Tuple[ScorerSpec, Dict[PositiveDefinition, MetricSummary]]


def write_curve_csv(path: str, report: CurveReport):
    rows = [[point.threshold, point.detection_rate, point.false_alarm_rate, point.precision, point.recall]
            for point in report.points]
    write_csv(path, CURVE_HEADER, rows)


def write_scored_csv(path: str, samples: Iterable[ScoredSample]):
    rows = [[sample.sample_id, str(sample.group), sample.raw_score, sample.oriented_score,
             '|'.join(sorted(sample.flags))]
            for sample in samples]
    write_csv(path, SCORED_HEADER, rows)


def write_summary_csv(path: str, summaries: Sequence[ScorerSummary], mode: Optional[FoldMode] = None):
    rows = []
    for spec, metrics in summaries:
        for positive_definition in PositiveDefinition:
            if positive_definition not in metrics:
                continue
            summary = metrics[positive_definition]
            rows.append([
                spec.name, str(positive_definition), summary.auroc, summary.aupr, summary.n_pos, summary.n_neg,
                str(mode) if mode is not None else 'none', summary.auroc_std, summary.aupr_std,
            ])
    write_csv(path, SUMMARY_HEADER, rows)


def write_table_csv(path: str, summaries: Sequence[ScorerSummary]):
    """
    Writes the evaluation table: one column per scorer, an AUC row and a ROC row.
    """
    header = ['metric'] + [spec.name for spec, _ in summaries]
    rows = []
    for label, positive_definition, field in TABLE_ROWS:
        row: List = [label]
        for _, metrics in summaries:
            summary = metrics.get(positive_definition)
            row.append(getattr(summary, field) if summary is not None else None)
        rows.append(row)
    write_csv(path, header, rows)


def write_strongest_curves_csv(path: str, results: Sequence[EvaluationResult],
                               positive_definition: PositiveDefinition = PositiveDefinition.NOVEL_ONLY):
    rows = []
    for result in results:
        for point in result.reports[positive_definition].points:
            rows.append([result.spec.name, point.threshold, point.detection_rate, point.false_alarm_rate])
    write_csv(path, ['scorer', 'threshold', 'detection_rate', 'false_alarm_rate'], rows)


def write_strongest_curves_svg(path: str, results: Sequence[EvaluationResult],
                               positive_definition: PositiveDefinition = PositiveDefinition.NOVEL_ONLY):
    figure, axes = new_figure()
    ax = axes[0][0]
    for result in results:
        report = result.reports[positive_definition]
        ax.plot([p.false_alarm_rate for p in report.points], [p.detection_rate for p in report.points],
                label=f'{result.spec.name} ({report.auroc:.3f})')
    ax.plot([0.0, 1.0], [0.0, 1.0], linestyle=':', color='grey')
    ax.set_xlabel('false alarm rate')
    ax.set_ylabel('detection rate')
    ax.legend(loc='lower right')
    save_svg(figure, path)
