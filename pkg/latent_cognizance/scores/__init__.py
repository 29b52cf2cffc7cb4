from .data import (
    Orientation,
    ScoreValue,
    ScorerKind,
    ScorerSpec,
    SCORER_KINDS,
    get_scorer_names,
    get_scorer_spec,
    make_scorer_spec,
    parse_scorer_list,
)
from .scorers import (
    argmax_pair,
    cognizance_per_class,
    cognizance_sum,
    confidence_ratio,
    confidence_score,
    score,
    softmax,
)
