from .comparison import group_comparison
from .data import GroupComparison, TestMethod, TestResult
from .lilliefors import lilliefors, lilliefors_statistic, simulate_lilliefors_null
from .wilcoxon import wilcoxon_rank_sum
