from .builder import build_scored_samples, classify_outcome
from .data import (
    CurvePoint,
    CurveReport,
    EvaluationResult,
    FoldEvaluation,
    FoldMode,
    MetricSummary,
    PositiveDefinition,
    ScoredSample,
)
from .evaluator import EvaluationOptions, evaluate_folds, evaluate_scorer, strongest_scorers
from .metrics import aupr, auroc, sweep, trapezoid_area
