from enum import Enum
from typing import Dict, List, NamedTuple, Optional, Tuple

from ..scores.data import ScorerSpec
from ..shared.data import OutcomeGroup


class TestMethod(Enum):
    __test__ = False

    EXACT = 'exact'
    NORMAL_APPROX = 'normal_approx'
    MONTE_CARLO = 'monte_carlo'

    def __str__(self):
        return self.value


class TestResult(NamedTuple):
    __test__ = False

    statistic: float
    p_value: float
    method: TestMethod
    n1: int
    n2: int = 0
    seed: Optional[int] = None
    alpha: Optional[float] = None

    def rejects(self, alpha: float) -> bool:
        return self.p_value < alpha

    @property
    def rejected(self) -> Optional[bool]:
        """
        The verdict at the recorded significance level, or None when no level was recorded.
        """
        return None if self.alpha is None else self.rejects(self.alpha)


# The three pairwise comparisons, in reporting order.
GROUP_PAIRS: List[Tuple[OutcomeGroup, OutcomeGroup]] = [
    (OutcomeGroup.CP, OutcomeGroup.IP),
    (OutcomeGroup.CP, OutcomeGroup.NS),
    (OutcomeGroup.IP, OutcomeGroup.NS),
]


class GroupComparison(object):
    def __init__(self, spec: ScorerSpec, alpha: float, normality_alpha: float):
        self.spec = spec
        self.alpha = alpha
        self.normality_alpha = normality_alpha
        self.comparisons: Dict[Tuple[OutcomeGroup, OutcomeGroup], TestResult] = dict()
        self.normality: Dict[OutcomeGroup, Optional[TestResult]] = dict()
        self.warnings: List[str] = []

    @property
    def all_significant(self) -> bool:
        return all(result.rejects(self.alpha) for result in self.comparisons.values())
