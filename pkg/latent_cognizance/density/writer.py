from .data import DensityReport
from ..shared.helpers import write_csv
from ..shared.plotting import new_figure, save_svg

DENSITY_HEADER = ['group', 'score', 'density', 'bandwidth', 'n', 'log10_scale']
BOXPLOT_HEADER = ['group', 'min', 'q1', 'median', 'q3', 'max', 'lower_whisker', 'upper_whisker', 'outlier_count']


def write_density_csv(path: str, report: DensityReport):
    rows = []
    for label, curve in report.curves.items():
        for score, density in zip(curve.grid, curve.density):
            rows.append([label, float(score), float(density), curve.bandwidth, curve.n, curve.log10_scale])
    write_csv(path, DENSITY_HEADER, rows)


def write_boxplot_csv(path: str, report: DensityReport):
    rows = [[label, s.min, s.q1, s.median, s.q3, s.max, s.lower_whisker, s.upper_whisker, len(s.outliers)]
            for label, s in report.boxplots.items()]
    write_csv(path, BOXPLOT_HEADER, rows)


def write_density_svg(path: str, report: DensityReport):
    figure, axes = new_figure(1, 2, width=11.0, height=4.5)
    density_axes, box_axes = axes[0]
    for label, curve in report.curves.items():
        density_axes.plot(curve.grid, curve.density, label=label)
    density_axes.set_xlabel(f'log10 {report.scorer_name}' if report.log10_scale else report.scorer_name)
    density_axes.set_ylabel('density')
    if report.curves:
        density_axes.legend()
    box_axes.bxp([
        {
            'label': label,
            'med': s.median,
            'q1': s.q1,
            'q3': s.q3,
            'whislo': s.lower_whisker,
            'whishi': s.upper_whisker,
            'fliers': s.outliers,
        } for label, s in report.boxplots.items()
    ], showfliers=True)
    box_axes.set_ylabel(report.scorer_name)
    figure.suptitle(f'{report.scorer_name} ({report.mode})')
    save_svg(figure, path)
