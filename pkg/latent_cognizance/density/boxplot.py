from typing import Iterable

import numpy as np

from .data import BoxplotSummary
from ..shared.data import InvalidInputError

WHISKER_RANGE = 1.5


def boxplot_summary(xs: Iterable[float]) -> BoxplotSummary:
    """
    Five-number summary with linearly interpolated quartiles. Whiskers reach the most extreme values within
    1.5 IQR of the quartiles; everything beyond them is an outlier.
    """
    x = np.sort(np.asarray(list(xs), dtype=np.float64))
    if len(x) == 0:
        raise InvalidInputError('Boxplot summary needs at least one value')
    if not np.all(np.isfinite(x)):
        raise InvalidInputError('Boxplot sample contains non-finite values')
    q1, median, q3 = (float(q) for q in np.percentile(x, [25, 50, 75]))
    reach = WHISKER_RANGE * (q3 - q1)
    inside = x[(x >= q1 - reach) & (x <= q3 + reach)]
    outliers = x[(x < q1 - reach) | (x > q3 + reach)]
    return BoxplotSummary(
        min=float(x[0]),
        q1=q1,
        median=median,
        q3=q3,
        max=float(x[-1]),
        lower_whisker=float(inside[0]),
        upper_whisker=float(inside[-1]),
        outliers=[float(v) for v in outliers],
    )
