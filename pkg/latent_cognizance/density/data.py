from enum import Enum
from typing import Dict, List, NamedTuple

import numpy as np


class DensityCurve(NamedTuple):
    grid: np.ndarray
    density: np.ndarray
    bandwidth: float
    n: int
    log10_scale: bool = False

    @property
    def integral(self) -> float:
        """
        Trapezoidal integral of the density over the grid.
        """
        return float(np.sum(np.diff(self.grid) * (self.density[1:] + self.density[:-1]) / 2.0))

    def local_maxima(self) -> List[float]:
        d = self.density
        interior = np.flatnonzero((d[1:-1] > d[:-2]) & (d[1:-1] >= d[2:])) + 1
        return [float(self.grid[i]) for i in interior]


class BoxplotSummary(NamedTuple):
    min: float
    q1: float
    median: float
    q3: float
    max: float
    lower_whisker: float
    upper_whisker: float
    outliers: List[float]

    @property
    def iqr(self) -> float:
        return self.q3 - self.q1


class GroupMode(Enum):
    """
    How scored samples are split for plotting: sign (CP and IP together) against non-sign, or all three outcome
    groups separately.
    """
    SS_VS_NS = 'ss-vs-ns'
    CP_IP_NS = 'cp-ip-ns'

    def __str__(self):
        return self.value


class DensityReport(object):
    def __init__(self, scorer_name: str, mode: GroupMode, log10_scale: bool):
        self.scorer_name = scorer_name
        self.mode = mode
        self.log10_scale = log10_scale
        self.curves: Dict[str, DensityCurve] = dict()
        self.boxplots: Dict[str, BoxplotSummary] = dict()
        self.warnings: List[str] = []
