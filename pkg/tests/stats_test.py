import csv
import itertools
import math

import numpy as np
import pytest
from scipy.stats import rankdata

from latent_cognizance.evaluation.data import ScoredSample
from latent_cognizance.scores.data import get_scorer_spec
from latent_cognizance.shared.data import DegenerateEvaluationError, InvalidInputError, OutcomeGroup
from latent_cognizance.stats.comparison import group_comparison
from latent_cognizance.stats.data import TestMethod
from latent_cognizance.stats.lilliefors import lilliefors, lilliefors_statistic
from latent_cognizance.stats.wilcoxon import wilcoxon_rank_sum
from latent_cognizance.stats.writer import write_comparison_csv, write_normality_csv

CS2 = get_scorer_spec('cs2')


def brute_force_p_value(xs, ys) -> float:
    values = list(xs) + list(ys)
    doubled = [int(round(2 * r)) for r in rankdata(values)]
    n, n1 = len(values), len(xs)
    expected = n1 * (n + 1)
    observed = abs(sum(doubled[:n1]) - expected)
    subsets = list(itertools.combinations(range(n), n1))
    extreme = sum(1 for subset in subsets if abs(sum(doubled[i] for i in subset) - expected) >= observed)
    return extreme / math.comb(n, n1)


def test_wilcoxon_separated_samples():
    result = wilcoxon_rank_sum([1, 2, 3], [4, 5, 6])
    assert result.statistic == 0.0
    assert result.method is TestMethod.EXACT
    assert result.p_value == pytest.approx(0.1, abs=1e-12)


def test_wilcoxon_identical_samples():
    assert wilcoxon_rank_sum([1, 2, 3], [1, 2, 3]).p_value >= 0.99


def test_wilcoxon_single_values():
    result = wilcoxon_rank_sum([1.0], [2.0])
    assert result.method is TestMethod.EXACT
    assert result.p_value >= 0.33


def test_wilcoxon_is_symmetric():
    rng = np.random.default_rng(20)
    for size in (4, 30):
        xs, ys = rng.normal(size=size), rng.normal(0.5, 1, size=size + 3)
        forward, backward = wilcoxon_rank_sum(xs, ys), wilcoxon_rank_sum(ys, xs)
        assert forward.p_value == pytest.approx(backward.p_value, abs=1e-12)
        assert forward.statistic + backward.statistic == size * (size + 3)


def test_wilcoxon_exact_matches_enumeration():
    rng = np.random.default_rng(21)
    for _ in range(100):
        n1 = int(rng.integers(1, 6))
        n2 = int(rng.integers(1, 11 - n1))
        xs = rng.integers(0, 6, size=n1).astype(float)
        ys = rng.integers(0, 6, size=n2).astype(float)
        assert wilcoxon_rank_sum(xs, ys).p_value == brute_force_p_value(xs, ys)


def test_wilcoxon_normal_approximation_is_close_to_exact():
    rng = np.random.default_rng(22)
    for shift in (0.0, 0.5, 1.0, 2.0):
        xs, ys = rng.normal(size=8), rng.normal(shift, 1, size=8)
        exact = wilcoxon_rank_sum(xs, ys, exact=True)
        approx = wilcoxon_rank_sum(xs, ys, exact=False)
        assert approx.method is TestMethod.NORMAL_APPROX
        assert abs(exact.p_value - approx.p_value) <= 0.02


def test_wilcoxon_large_samples_use_normal_approximation():
    result = wilcoxon_rank_sum(range(10), range(5, 15))
    assert result.method is TestMethod.NORMAL_APPROX
    assert (result.n1, result.n2) == (10, 10)


def test_wilcoxon_calibration():
    rng = np.random.default_rng(23)
    trials = 2000
    rejections = sum(wilcoxon_rank_sum(rng.normal(size=50), rng.normal(size=60)).rejects(0.01)
                     for _ in range(trials))
    assert 0.003 <= rejections / trials <= 0.02


@pytest.mark.parametrize('xs, ys', [([], [1.0]), ([1.0], []), ([1.0, float('nan')], [2.0])])
def test_wilcoxon_invalid_samples(xs, ys):
    with pytest.raises(InvalidInputError):
        wilcoxon_rank_sum(xs, ys)


def test_lilliefors_rejects_uniform():
    xs = np.random.default_rng(24).uniform(size=1000)
    result = lilliefors(xs, 0.05)
    assert result.rejects(0.05)
    assert result.alpha == 0.05 and result.rejected
    assert result.method is TestMethod.MONTE_CARLO
    assert result.seed == 0


def test_lilliefors_invalid_samples():
    with pytest.raises(InvalidInputError, match='zero variance'):
        lilliefors([2.0] * 10)
    with pytest.raises(InvalidInputError, match='at least 5'):
        lilliefors([1.0, 2.0, 3.0, 4.0])
    with pytest.raises(InvalidInputError):
        lilliefors([1.0, 2.0, 3.0, 4.0, 5.0], alpha=1.5)


def test_lilliefors_statistic_is_affine_invariant():
    xs = np.random.default_rng(25).gamma(2.0, size=300)
    base = lilliefors_statistic(xs)
    assert lilliefors_statistic(3.0 * xs - 7.0) == pytest.approx(base, abs=1e-12)
    assert lilliefors_statistic(-2.0 * xs + 1.0) == pytest.approx(base, abs=1e-12)


def test_lilliefors_is_reproducible():
    xs = np.random.default_rng(26).normal(size=40)
    first = lilliefors(xs, rng=7, n_simulations=2000)
    second = lilliefors(xs, rng=7, n_simulations=2000)
    assert first == second
    assert first.seed == 7


def test_lilliefors_calibration():
    rng = np.random.default_rng(27)
    trials = 1000
    rejections = sum(lilliefors(rng.normal(3.0, 2.0, size=200)).rejects(0.05) for _ in range(trials))
    assert 0.03 <= rejections / trials <= 0.07


def make_group_samples(cp, ip, ns):
    samples = []
    for group, values in ((OutcomeGroup.CP, cp), (OutcomeGroup.IP, ip), (OutcomeGroup.NS, ns)):
        for index, value in enumerate(values):
            is_novel = group is OutcomeGroup.NS
            true_class = None if is_novel else 0
            predicted = 0 if group is OutcomeGroup.CP else 1
            samples.append(ScoredSample(f'{group}{index}', true_class, is_novel, predicted, group, float(value)))
    return samples


def test_group_comparison_of_identical_groups():
    values = list(range(10))
    comparison = group_comparison(make_group_samples(values, values, values), CS2)
    assert not comparison.all_significant
    for result in comparison.comparisons.values():
        assert result.p_value >= 0.99
    assert list(comparison.comparisons) == [(OutcomeGroup.CP, OutcomeGroup.IP), (OutcomeGroup.CP, OutcomeGroup.NS),
                                            (OutcomeGroup.IP, OutcomeGroup.NS)]


def test_group_comparison_of_separated_groups():
    rng = np.random.default_rng(28)
    samples = make_group_samples(rng.normal(10, 1, 200), rng.normal(5, 1, 100), rng.normal(0, 1, 200))
    comparison = group_comparison(samples, CS2)
    assert comparison.all_significant
    assert all(result is not None for result in comparison.normality.values())
    assert comparison.warnings == []


def test_group_comparison_names_the_empty_group():
    with pytest.raises(DegenerateEvaluationError, match='IP group is empty'):
        group_comparison(make_group_samples([1, 2, 3], [], [4, 5, 6]), CS2)


def test_group_comparison_skips_normality_for_small_groups():
    comparison = group_comparison(make_group_samples(range(20), [1.0, 2.0], range(5, 25)), CS2)
    assert comparison.normality[OutcomeGroup.IP] is None
    assert len(comparison.warnings) == 1
    assert 'IP' in comparison.warnings[0]


def test_comparison_writers(tmp_path):
    comparison = group_comparison(make_group_samples(range(20), [1.0, 2.0], range(5, 25)), CS2)
    comparison_path = tmp_path / 'comparison.csv'
    normality_path = tmp_path / 'normality.csv'
    write_comparison_csv(str(comparison_path), [('all', comparison)])
    write_normality_csv(str(normality_path), [('all', comparison)])

    with open(comparison_path, newline='') as fp:
        rows = list(csv.DictReader(fp))
    assert [row['comparison'] for row in rows] == ['CP-IP', 'CP-NS', 'IP-NS']
    assert all(row['scorer'] == 'cs2' and row['scope'] == 'all' for row in rows)
    assert all(float(row['alpha']) == 0.01 for row in rows)
    assert all(row['significant'] == ('1' if float(row['p_value']) < 0.01 else '0') for row in rows)

    with open(normality_path, newline='') as fp:
        rows = {row['group']: row for row in csv.DictReader(fp)}
    assert rows['IP']['p_value'] == ''
    assert rows['CP']['seed'] == '0'
    assert float(rows['CP']['alpha']) == 0.05
    assert rows['CP']['non_normal'] in ('0', '1')


def test_group_comparison_records_its_levels():
    rng = np.random.default_rng(29)
    samples = make_group_samples(rng.normal(10, 1, 50), rng.normal(9.8, 1, 50), rng.normal(0, 1, 50))
    comparison = group_comparison(samples, CS2, alpha=0.001, normality_alpha=0.2)
    assert all(result.alpha == 0.001 for result in comparison.comparisons.values())
    assert all(result.alpha == 0.2 for result in comparison.normality.values())
    cp_ip = comparison.comparisons[(OutcomeGroup.CP, OutcomeGroup.IP)]
    assert cp_ip.rejected == (cp_ip.p_value < 0.001)
    assert comparison.comparisons[(OutcomeGroup.CP, OutcomeGroup.NS)].rejected


def test_unjudged_result_has_no_verdict():
    result = wilcoxon_rank_sum([1.0, 2.0, 3.0], [4.0, 5.0, 6.0])
    assert result.alpha is None
    assert result.rejected is None
    assert result.rejects(0.2)
