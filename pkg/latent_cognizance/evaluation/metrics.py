from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import rankdata

from .data import CurvePoint, CurveReport, PositiveDefinition, ScoredSample
from ..shared.data import DegenerateEvaluationError


def split_scores(samples: Iterable[ScoredSample],
                 positive_definition: PositiveDefinition) -> Tuple[np.ndarray, np.ndarray]:
    """
    @return: The oriented scores of the positive samples and of the negative samples.
    """
    positives, negatives = [], []
    for sample in samples:
        if positive_definition.is_positive(sample.group):
            positives.append(sample.oriented_score)
        else:
            negatives.append(sample.oriented_score)
    return np.array(positives, dtype=np.float64), np.array(negatives, dtype=np.float64)


def _check_sides(positives: np.ndarray, negatives: Optional[np.ndarray], positive_definition: PositiveDefinition):
    if len(positives) == 0:
        raise DegenerateEvaluationError(
            f'Cannot evaluate with positive definition "{positive_definition}": there are no positive samples')
    if negatives is not None and len(negatives) == 0:
        raise DegenerateEvaluationError(
            f'Cannot evaluate with positive definition "{positive_definition}": there are no negative samples')


def _interior_thresholds(scores: np.ndarray, n_thresholds: Optional[int]) -> np.ndarray:
    unique = np.unique(scores)
    lower, upper = unique[:-1], unique[1:]
    midpoints = lower / 2.0 + upper / 2.0
    # Adjacent floats have no midpoint strictly between them; the upper value separates them just as well.
    midpoints = np.where(midpoints > lower, midpoints, upper)
    if n_thresholds is None or n_thresholds >= len(midpoints):
        return midpoints
    if n_thresholds < 1:
        return midpoints[:0]
    indices = np.unique(np.round(np.linspace(0, len(midpoints) - 1, n_thresholds)).astype(int))
    return midpoints[indices]


def curve_points(positives: np.ndarray, negatives: np.ndarray, thresholds: Sequence[float]) -> List[CurvePoint]:
    positives = np.sort(positives)
    negatives = np.sort(negatives)
    thresholds = np.asarray(thresholds, dtype=np.float64)
    true_positives = np.searchsorted(positives, thresholds, side='left')
    false_positives = np.searchsorted(negatives, thresholds, side='left')
    points = []
    for threshold, tp, fp in zip(thresholds, true_positives, false_positives):
        flagged = tp + fp
        detection_rate = tp / len(positives)
        points.append(CurvePoint(
            threshold=float(threshold),
            detection_rate=float(detection_rate),
            false_alarm_rate=float(fp / len(negatives)),
            precision=float(tp / flagged) if flagged > 0 else 1.0,
            recall=float(detection_rate),
        ))
    return points


def trapezoid_area(points: Sequence[CurvePoint]) -> float:
    """
    Area under the detection-rate versus false-alarm-rate polyline.
    """
    far = np.array([point.false_alarm_rate for point in points])
    dr = np.array([point.detection_rate for point in points])
    return float(np.sum(np.diff(far) * (dr[1:] + dr[:-1]) / 2.0))


def auroc_from_scores(positives: np.ndarray, negatives: np.ndarray) -> float:
    """
    Mann-Whitney estimate of Pr[positive scores lower than negative], counting ties as one half.
    """
    ranks = rankdata(np.concatenate([positives, negatives]))
    n_pos, n_neg = len(positives), len(negatives)
    u = ranks[n_pos:].sum() - n_neg * (n_neg + 1) / 2.0
    return float(u / (n_pos * n_neg))


def aupr_from_scores(positives: np.ndarray, negatives: np.ndarray) -> float:
    """
    Step-interpolated area under the precision-recall curve: the sum of precision times the recall gained at each
    distinct score, flagging the lowest scores first. Tied scores are flagged together.
    """
    scores = np.concatenate([positives, negatives])
    labels = np.concatenate([np.ones(len(positives)), np.zeros(len(negatives))])
    order = np.argsort(scores, kind='mergesort')
    scores, labels = scores[order], labels[order]
    block_ends = np.append(np.flatnonzero(np.diff(scores)), len(scores) - 1)
    true_positives = np.cumsum(labels)[block_ends]
    precision = true_positives / (block_ends + 1)
    recall = true_positives / len(positives)
    return float(np.sum(precision * np.diff(np.concatenate([[0.0], recall]))))


def sweep(samples: Sequence[ScoredSample],
          positive_definition: PositiveDefinition,
          n_thresholds: Optional[int] = None) -> CurveReport:
    """
    Sweeps the novelty threshold over the oriented scores.

    @param samples: The scored samples.
    @param positive_definition: Which outcome groups are positives.
    @param n_thresholds: The number of interior thresholds to report, or None for one between every pair of
    consecutive distinct scores. The -inf and +inf endpoints are always included. The scalar areas are always
    computed from every distinct score.
    @return: The curve report.
    """
    positives, negatives = split_scores(samples, positive_definition)
    _check_sides(positives, negatives, positive_definition)
    interior = _interior_thresholds(np.concatenate([positives, negatives]), n_thresholds)
    thresholds = np.concatenate([[-np.inf], interior, [np.inf]])
    return CurveReport(
        positive_definition=positive_definition,
        points=curve_points(positives, negatives, thresholds),
        auroc=auroc_from_scores(positives, negatives),
        aupr=aupr_from_scores(positives, negatives),
        n_pos=len(positives),
        n_neg=len(negatives),
    )


def auroc(samples: Sequence[ScoredSample], positive_definition: PositiveDefinition) -> float:
    positives, negatives = split_scores(samples, positive_definition)
    _check_sides(positives, negatives, positive_definition)
    return auroc_from_scores(positives, negatives)


def aupr(samples: Sequence[ScoredSample], positive_definition: PositiveDefinition) -> float:
    positives, negatives = split_scores(samples, positive_definition)
    _check_sides(positives, None, positive_definition)
    return aupr_from_scores(positives, negatives)
