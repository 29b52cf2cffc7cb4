from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from .builder import build_scored_samples
from .data import (
    EvaluationResult,
    FoldEvaluation,
    FoldMode,
    MetricSummary,
    PositiveDefinition,
    ScoredSample,
)
from .metrics import sweep
from ..scores.data import ScorerSpec
from ..shared.data import InvalidInputError, LogitRecord


class EvaluationOptions(object):
    def __init__(self,
                 positive_definitions: Optional[Sequence[PositiveDefinition]] = None,
                 n_thresholds: Optional[int] = None):
        self.positive_definitions = list(positive_definitions) if positive_definitions is not None \
            else [PositiveDefinition.NOVEL_ONLY, PositiveDefinition.WRONG_OR_NOVEL]
        self.n_thresholds = n_thresholds


def evaluate_samples(samples: List[ScoredSample], spec: ScorerSpec,
                     options: Optional[EvaluationOptions] = None) -> EvaluationResult:
    options = options if options is not None else EvaluationOptions()
    result = EvaluationResult(spec, samples)
    for positive_definition in options.positive_definitions:
        result.reports[positive_definition] = sweep(samples, positive_definition, options.n_thresholds)
    return result


def evaluate_scorer(records: Iterable[LogitRecord], spec: ScorerSpec,
                    options: Optional[EvaluationOptions] = None) -> EvaluationResult:
    """
    Scores the records with one scorer and evaluates how well the scores flag positives under each requested
    positive definition (by default both: `novel_only` for the ROC column, `wrong_or_novel` for the AUC column).

    The result only depends on the multiset of records, not their order: tied scores are always credited by half.
    """
    samples, warnings = build_scored_samples(records, spec)
    result = evaluate_samples(samples, spec, options)
    result.warnings.extend(warnings)
    return result


def evaluate_folds(fold_records: Dict[int, List[LogitRecord]],
                   spec: ScorerSpec,
                   mode: FoldMode = FoldMode.POOLED,
                   options: Optional[EvaluationOptions] = None) -> FoldEvaluation:
    """
    Evaluates one scorer over per-fold test sets.

    @param fold_records: Test records keyed by fold index.
    @param spec: The scorer.
    @param mode: `pooled` evaluates the concatenation of all folds once; `per_fold` evaluates each fold and averages
    the areas.
    @param options: Evaluation options.
    @return: The fold evaluation.
    """
    if len(fold_records) == 0:
        raise InvalidInputError('No folds were given')
    options = options if options is not None else EvaluationOptions()
    evaluation = FoldEvaluation(spec, mode)
    fold_samples = dict()
    for fold_index in sorted(fold_records):
        samples, warnings = build_scored_samples(fold_records[fold_index], spec)
        fold_samples[fold_index] = samples
        evaluation.warnings.extend(f'fold {fold_index}: {warning}' for warning in warnings)

    if mode is FoldMode.POOLED:
        pooled = [sample for fold_index in sorted(fold_samples) for sample in fold_samples[fold_index]]
        evaluation.pooled_result = evaluate_samples(pooled, spec, options)
        evaluation.summaries.update(summarize_result(evaluation.pooled_result))
        return evaluation

    for fold_index, samples in fold_samples.items():
        evaluation.fold_results[fold_index] = evaluate_samples(samples, spec, options)
    for positive_definition in options.positive_definitions:
        reports = [result.reports[positive_definition] for result in evaluation.fold_results.values()]
        aurocs = np.array([report.auroc for report in reports])
        auprs = np.array([report.aupr for report in reports])
        evaluation.summaries[positive_definition] = MetricSummary(
            positive_definition,
            float(aurocs.mean()),
            float(auprs.mean()),
            float(aurocs.std()),
            float(auprs.std()),
            sum(report.n_pos for report in reports),
            sum(report.n_neg for report in reports),
        )
    return evaluation


def summarize_result(result: EvaluationResult) -> Dict[PositiveDefinition, MetricSummary]:
    return {
        positive_definition: MetricSummary(positive_definition, report.auroc, report.aupr, 0.0, 0.0,
                                           report.n_pos, report.n_neg)
        for positive_definition, report in result.reports.items()
    }


def strongest_scorers(
        results: Sequence[EvaluationResult],
        count: int = 4,
        positive_definition: PositiveDefinition = PositiveDefinition.NOVEL_ONLY) -> List[EvaluationResult]:
    """
    Picks the `count` results with the largest AUROC under `positive_definition`. Equal AUROCs keep their input
    order.
    """
    ranked = [result for result in results if positive_definition in result.reports]
    ranked = sorted(ranked, key=lambda result: -result.reports[positive_definition].auroc)
    return ranked[:count]
