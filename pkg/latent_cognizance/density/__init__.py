from .boxplot import boxplot_summary
from .builder import build_density_report, group_raw_scores
from .data import BoxplotSummary, DensityCurve, DensityReport, GroupMode
from .kde import kde, silverman_bandwidth
