__version__ = '1.0.0'

from .evaluation import EvaluationOptions, PositiveDefinition, evaluate_folds, evaluate_scorer
from .logits import make_fold_plan, read_logit_csv, write_logit_csv
from .scores import ScorerKind, ScorerSpec, ScoreValue, get_scorer_spec, score
from .shared.data import LatentCognizanceError, LogitRecord, OutcomeGroup, make_logit_record
