from enum import Enum
from typing import Dict, FrozenSet, List, NamedTuple, Optional

from ..scores.data import ScorerSpec
from ..shared.data import OutcomeGroup


class PositiveDefinition(Enum):
    """
    Which outcome groups count as positives. `wrong_or_novel` (IP and NS) backs the AUC column of the evaluation
    tables, `novel_only` (NS) backs the ROC column.
    """
    WRONG_OR_NOVEL = 'wrong_or_novel'
    NOVEL_ONLY = 'novel_only'

    def __str__(self):
        return self.value

    def is_positive(self, group: OutcomeGroup) -> bool:
        if self is PositiveDefinition.NOVEL_ONLY:
            return group is OutcomeGroup.NS
        return group is not OutcomeGroup.CP


class ScoredSample(NamedTuple):
    sample_id: str
    true_class: Optional[int]
    is_novel: bool
    predicted_class: int
    group: OutcomeGroup
    oriented_score: float
    raw_score: float = 0.0
    flags: FrozenSet[str] = frozenset()
    group_id: str = ''


class CurvePoint(NamedTuple):
    threshold: float
    detection_rate: float
    false_alarm_rate: float
    precision: float
    recall: float


class CurveReport(NamedTuple):
    """
    A threshold sweep, with thresholds ascending. A sample is flagged when its oriented score is below the threshold,
    so detection and false-alarm rates never decrease along `points`.
    """
    positive_definition: PositiveDefinition
    points: List[CurvePoint]
    auroc: float
    aupr: float
    n_pos: int
    n_neg: int


class EvaluationResult(object):
    def __init__(self, spec: ScorerSpec, samples: List[ScoredSample]):
        self.spec = spec
        self.samples = samples
        self.reports: Dict[PositiveDefinition, CurveReport] = dict()
        self.warnings: List[str] = []

    @property
    def novel_only(self) -> Optional[CurveReport]:
        return self.reports.get(PositiveDefinition.NOVEL_ONLY)

    @property
    def wrong_or_novel(self) -> Optional[CurveReport]:
        return self.reports.get(PositiveDefinition.WRONG_OR_NOVEL)


class FoldMode(Enum):
    POOLED = 'pooled'
    PER_FOLD = 'per_fold'

    def __str__(self):
        return self.value


class MetricSummary(NamedTuple):
    positive_definition: PositiveDefinition
    auroc: float
    aupr: float
    auroc_std: float
    aupr_std: float
    n_pos: int
    n_neg: int


class FoldEvaluation(object):
    """
    Evaluation of one scorer over a set of folds. In pooled mode `summaries` come from a single evaluation of the
    concatenated fold test sets (standard deviations are zero); in per-fold mode they are means over the folds.
    """

    def __init__(self, spec: ScorerSpec, mode: FoldMode):
        self.spec = spec
        self.mode = mode
        self.fold_results: Dict[int, EvaluationResult] = dict()
        self.pooled_result: Optional[EvaluationResult] = None
        self.summaries: Dict[PositiveDefinition, MetricSummary] = dict()
        self.warnings: List[str] = []
