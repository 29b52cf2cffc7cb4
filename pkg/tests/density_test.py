import csv

import numpy as np
import pytest
from scipy.stats import norm

from latent_cognizance.density.boxplot import boxplot_summary
from latent_cognizance.density.builder import build_density_report, group_raw_scores
from latent_cognizance.density.data import GroupMode
from latent_cognizance.density.kde import kde, silverman_bandwidth
from latent_cognizance.density.writer import write_boxplot_csv, write_density_csv, write_density_svg
from latent_cognizance.evaluation.data import ScoredSample
from latent_cognizance.shared.data import InvalidInputError, OutcomeGroup


def test_kde_recovers_standard_normal():
    xs = np.random.default_rng(30).normal(size=100000)
    curve = kde(xs)
    assert len(curve.grid) == 512
    assert np.max(np.abs(curve.density - norm.pdf(curve.grid))) <= 0.02
    assert curve.integral == pytest.approx(1.0, abs=1e-3)


def test_kde_is_location_equivariant():
    xs = np.random.default_rng(31).normal(size=500)
    base, shifted = kde(xs), kde(xs + 5.0)
    assert shifted.grid == pytest.approx(base.grid + 5.0, abs=1e-9)
    assert shifted.density == pytest.approx(base.density, abs=1e-9)
    assert shifted.bandwidth == pytest.approx(base.bandwidth, abs=1e-12)


def test_kde_finds_both_modes():
    rng = np.random.default_rng(32)
    xs = np.concatenate([rng.normal(-5, 1, 2000), rng.normal(5, 1, 2000)])
    maxima = kde(xs).local_maxima()
    assert len(maxima) == 2
    assert maxima[0] == pytest.approx(-5.0, abs=1.0)
    assert maxima[1] == pytest.approx(5.0, abs=1.0)


def test_kde_on_log_scale():
    xs = np.random.default_rng(33).lognormal(0.0, 1.0, size=1000)
    curve = kde(xs, grid_size=64, log10_scale=True)
    assert curve.log10_scale
    assert len(curve.grid) == 64
    assert curve.bandwidth == pytest.approx(silverman_bandwidth(np.log10(xs)))


@pytest.mark.parametrize('xs, kwargs', [
    ([1.0], {}),
    ([2.0, 2.0, 2.0], {}),
    ([1.0, float('nan'), 2.0], {}),
    ([1.0, 0.0, 2.0], {'log10_scale': True}),
    ([1.0, 2.0, 3.0], {'grid_size': 1}),
])
def test_kde_invalid_input(xs, kwargs):
    with pytest.raises(InvalidInputError):
        kde(xs, **kwargs)


def test_silverman_bandwidth_uses_sd_without_spread():
    xs = [0.0] * 10 + [1.0]
    assert silverman_bandwidth(xs) == pytest.approx(0.9 * np.std(xs, ddof=1) * 11 ** -0.2)


def test_boxplot_of_one_to_nine():
    summary = boxplot_summary(range(1, 10))
    assert (summary.min, summary.q1, summary.median, summary.q3, summary.max) == (1.0, 3.0, 5.0, 7.0, 9.0)
    assert summary.iqr == 4.0
    assert (summary.lower_whisker, summary.upper_whisker) == (1.0, 9.0)
    assert summary.outliers == []


def test_boxplot_of_single_value():
    summary = boxplot_summary([4.0])
    assert (summary.min, summary.q1, summary.median, summary.q3, summary.max) == (4.0,) * 5
    assert (summary.lower_whisker, summary.upper_whisker) == (4.0, 4.0)
    assert summary.outliers == []


def test_boxplot_outlier():
    summary = boxplot_summary([1, 2, 3, 4, 100])
    assert (summary.q1, summary.median, summary.q3) == (2.0, 3.0, 4.0)
    assert summary.outliers == [100.0]
    assert (summary.lower_whisker, summary.upper_whisker) == (1.0, 4.0)


def test_boxplot_ignores_order():
    rng = np.random.default_rng(34)
    xs = rng.normal(size=51)
    assert boxplot_summary(xs) == boxplot_summary(rng.permutation(xs))


def test_boxplot_invalid_input():
    with pytest.raises(InvalidInputError):
        boxplot_summary([])
    with pytest.raises(InvalidInputError):
        boxplot_summary([1.0, float('inf')])


def make_samples(cp, ip, ns):
    samples = []
    for group, values in ((OutcomeGroup.CP, cp), (OutcomeGroup.IP, ip), (OutcomeGroup.NS, ns)):
        for index, value in enumerate(values):
            is_novel = group is OutcomeGroup.NS
            samples.append(ScoredSample(f'{group}{index}', None if is_novel else 0, is_novel, 0, group, -float(value),
                                        raw_score=float(value)))
    return samples


def test_group_raw_scores():
    samples = make_samples([1.0, 2.0], [3.0], [4.0, 5.0])
    assert group_raw_scores(samples, GroupMode.SS_VS_NS) == {'SS': [1.0, 2.0, 3.0], 'NS': [4.0, 5.0]}
    assert group_raw_scores(samples, GroupMode.CP_IP_NS) == {'CP': [1.0, 2.0], 'IP': [3.0], 'NS': [4.0, 5.0]}
    assert group_raw_scores(make_samples([1.0], [], []), GroupMode.CP_IP_NS) == {'CP': [1.0]}


def test_density_report_warns_about_unsmoothable_groups():
    rng = np.random.default_rng(35)
    samples = make_samples(rng.normal(size=50), [7.0], rng.normal(3, 1, size=40))
    report = build_density_report(samples, 'cs2', GroupMode.CP_IP_NS, grid_size=32)
    assert sorted(report.boxplots) == ['CP', 'IP', 'NS']
    assert sorted(report.curves) == ['CP', 'NS']
    assert len(report.warnings) == 1
    assert 'IP' in report.warnings[0]


def test_density_report_rejects_non_positive_values_on_log_scale():
    samples = make_samples([1.0, 2.0, 3.0], [], [-1.0, 2.0])
    with pytest.raises(InvalidInputError, match='log scale'):
        build_density_report(samples, 'lc_cubic', log10_scale=True)


def test_density_writers(tmp_path):
    rng = np.random.default_rng(36)
    samples = make_samples(rng.normal(size=30), rng.normal(size=10), rng.normal(2, 1, size=30))
    report = build_density_report(samples, 'cs3', grid_size=16)
    density_path, boxplot_path = tmp_path / 'density.csv', tmp_path / 'boxplot.csv'
    write_density_csv(str(density_path), report)
    write_boxplot_csv(str(boxplot_path), report)

    with open(density_path, newline='') as fp:
        rows = list(csv.DictReader(fp))
    assert len(rows) == 32
    assert {row['group'] for row in rows} == {'SS', 'NS'}
    assert all(row['n'] in ('40', '30') and row['log10_scale'] == '0' for row in rows)

    with open(boxplot_path, newline='') as fp:
        rows = list(csv.DictReader(fp))
    assert [row['group'] for row in rows] == ['SS', 'NS']


def test_density_svg_is_reproducible(tmp_path):
    rng = np.random.default_rng(37)
    samples = make_samples(rng.normal(size=30), rng.normal(size=10), rng.normal(2, 1, size=30))
    report = build_density_report(samples, 'cs3', GroupMode.CP_IP_NS, grid_size=16)
    first, second = tmp_path / 'first.svg', tmp_path / 'second.svg'
    write_density_svg(str(first), report)
    write_density_svg(str(second), report)
    assert first.read_text().lstrip().startswith('<?xml')
    assert first.read_bytes() == second.read_bytes()
