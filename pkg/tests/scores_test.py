import math
import warnings

import numpy as np
import pytest

from latent_cognizance.scores.data import (
    FLAG_CLAMPED,
    FLAG_LOG_DOMAIN,
    FLAG_UNRELIABLE,
    Orientation,
    ScorerKind,
    get_scorer_names,
    get_scorer_spec,
    make_scorer_spec,
    parse_scorer_list,
)
from latent_cognizance.scores.scorers import (
    CS4_CEILING,
    argmax_pair,
    cognizance_per_class,
    cognizance_sum,
    confidence_ratio,
    confidence_score,
    score,
    softmax,
)
from latent_cognizance.shared.data import InvalidInputError, ScoreDivisionByZeroError

CS1 = get_scorer_spec('cs1')
CS2 = get_scorer_spec('cs2')
CS3 = get_scorer_spec('cs3')
CS4 = get_scorer_spec('cs4')
LC_IDENTITY = get_scorer_spec('lc_identity')
LC_EXP = get_scorer_spec('lc_exp')
LC_QUADRATIC = get_scorer_spec('lc_quadratic')
LC_CUBIC = get_scorer_spec('lc_cubic')
LC_ABSOLUTE = get_scorer_spec('lc_absolute')


def test_softmax_examples():
    assert softmax([0, 0]) == pytest.approx([0.5, 0.5], abs=1e-15)
    assert softmax([7.5, 7.5, 7.5]) == pytest.approx([1 / 3] * 3, abs=1e-15)
    assert softmax([1, 2, 3]) == pytest.approx([0.09003057, 0.24472847, 0.66524096], abs=1e-8)


def test_softmax_large_logits_do_not_overflow():
    y = softmax([1000.0, 999.0])
    assert np.all(np.isfinite(y))
    assert y.sum() == pytest.approx(1.0, abs=1e-12)


def test_softmax_shift_invariance():
    rng = np.random.default_rng(1)
    for _ in range(100):
        a = rng.normal(0, 5, size=rng.integers(2, 20))
        c = rng.normal(0, 100)
        assert np.argmax(softmax(a)) == np.argmax(softmax(a + c))
        assert softmax(a + c) == pytest.approx(softmax(a), abs=1e-12)


@pytest.mark.parametrize('values', [[1.0], [], [1.0, float('nan')], [float('inf'), 0.0]])
def test_invalid_logit_vectors(values):
    with pytest.raises(InvalidInputError):
        softmax(values)


@pytest.mark.parametrize('logits, expected', [
    ([4, 2, 1], (0, 1)),
    ([1, 3, 3], (1, 2)),
    ([5, 5], (0, 1)),
])
def test_argmax_pair(logits, expected):
    assert argmax_pair(logits) == expected


def test_confidence_ratio_examples():
    assert confidence_ratio([4, 2, 1]).raw == 2.0
    with pytest.raises(ScoreDivisionByZeroError):
        confidence_ratio([3, 0, -1])
    value = confidence_ratio([1.5, -0.5])
    assert value.raw == -3.0
    assert value.is_unreliable
    assert value.flags == frozenset({FLAG_UNRELIABLE})


def test_confidence_ratio_above_one_for_positive_logits():
    assert confidence_ratio([5.0, 2.0, 0.5]).raw > 1.0


def test_confidence_score_examples():
    assert confidence_score(CS2, [4, 2, 1]).raw == 4.0
    assert confidence_score(CS3, [2.5, 2.5]).raw == 0.0
    assert confidence_score(CS1, [1, 2, 3]).raw == pytest.approx(0.66524096, abs=1e-8)
    assert confidence_score(CS4, [0, 0]).raw == pytest.approx(0.0, abs=1e-15)


def test_cs4_saturation_is_clamped():
    value = confidence_score(CS4, [100.0, 0.0])
    assert value.raw == CS4_CEILING
    assert value.is_clamped
    assert FLAG_CLAMPED in value.flags
    assert not confidence_score(CS4, [3.0, 0.0]).is_clamped


def test_confidence_score_rejects_other_kinds():
    with pytest.raises(InvalidInputError):
        confidence_score(LC_EXP, [1.0, 2.0])


def test_cognizance_sum_examples():
    assert cognizance_sum(LC_CUBIC, [1, -1]).raw == 0.0
    assert cognizance_sum(LC_ABSOLUTE, [1, -1]).raw == 2.0
    assert cognizance_sum(LC_EXP, [1, 2, 3]).raw == pytest.approx(30.19287485, abs=1e-8)
    identity = cognizance_sum(LC_IDENTITY, [1, 2, 3])
    assert identity.raw == 6.0
    assert identity.oriented == -6.0


def test_cognizance_per_class_examples():
    assert list(cognizance_per_class(LC_QUADRATIC, [2, -2])) == [4.0, 4.0]
    assert list(cognizance_per_class(LC_CUBIC, [0, 1])) == [0.0, 1.0]
    assert list(cognizance_per_class(LC_EXP, [0, 0])) == [1.0, 1.0]


def test_cognizance_sum_matches_per_class_sum():
    rng = np.random.default_rng(2)
    for _ in range(200):
        a = rng.normal(0, 3, size=rng.integers(2, 30))
        for spec in (LC_IDENTITY, LC_EXP, LC_QUADRATIC, LC_CUBIC, LC_ABSOLUTE):
            expected = math.fsum(cognizance_per_class(spec, a))
            assert cognizance_sum(spec, a).raw == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_exponential_cognizance_overflow_uses_log_domain():
    value = cognizance_sum(LC_EXP, [800.0, 1.0])
    assert math.isfinite(value.raw)
    assert value.is_log_domain
    assert FLAG_LOG_DOMAIN in value.flags
    assert value.raw == pytest.approx(800.0, abs=1e-9)
    assert value.ranking == value.raw
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        per_class = cognizance_per_class(LC_EXP, [800.0, 1.0])
    assert list(per_class) == [800.0, 1.0]
    assert any(issubclass(w.category, RuntimeWarning) for w in caught)


def test_exponential_cognizance_switches_domain_with_its_sum():
    a = [709.5, 709.5]
    value = cognizance_sum(LC_EXP, a)
    assert value.is_log_domain
    assert value.raw == pytest.approx(709.5 + math.log(2.0), rel=1e-12)
    with pytest.warns(RuntimeWarning):
        per_class = cognizance_per_class(LC_EXP, a)
    assert list(per_class) == a
    assert math.isfinite(math.fsum(per_class))


@pytest.mark.parametrize('spec, a', [
    (LC_CUBIC, [1e103, -1e103]),
    (LC_CUBIC, [1e103, 1.0]),
    (LC_QUADRATIC, [1e155, 0.0]),
])
def test_power_cognizance_overflow_is_an_input_error(spec, a):
    with pytest.raises(InvalidInputError, match=f'{spec.name} overflows'):
        cognizance_per_class(spec, a)
    with pytest.raises(InvalidInputError, match=f'{spec.name} overflows'):
        cognizance_sum(spec, a)


@pytest.mark.parametrize('spec', [LC_IDENTITY, LC_ABSOLUTE])
def test_overflowing_sum_is_an_input_error(spec):
    with pytest.raises(InvalidInputError, match='exceeds the float range'):
        cognizance_sum(spec, [1.7e308, 1.7e308])


def test_exponential_cognizance_ranks_by_log_sum():
    small, large = cognizance_sum(LC_EXP, [1.0, 2.0]), cognizance_sum(LC_EXP, [3.0, 2.0])
    assert small.ranking < large.ranking
    assert small.log_raw == pytest.approx(math.log(small.raw), rel=1e-12)


def test_default_orientations():
    for kind in ScorerKind:
        spec = make_scorer_spec(kind)
        expected = Orientation.HIGH_MEANS_NONSIGN if kind is ScorerKind.LC_IDENTITY else Orientation.HIGH_MEANS_SIGN
        assert spec.orientation is expected


def test_orientation_override():
    spec = get_scorer_spec('cs2', Orientation.HIGH_MEANS_NONSIGN)
    value = score(spec, [4, 2, 1])
    assert value.raw == 4.0
    assert value.oriented == -4.0


def test_oriented_value_follows_orientation():
    rng = np.random.default_rng(3)
    for name in get_scorer_names():
        spec = get_scorer_spec(name)
        for _ in range(20):
            a = rng.normal(0, 2, size=5) + 0.01
            value = score(spec, a)
            if value.log_raw is None:
                assert value.oriented == spec.orientation.apply(value.raw)


def test_score_invariants():
    rng = np.random.default_rng(4)
    for _ in range(200):
        a = rng.normal(0, 4, size=rng.integers(2, 12))
        assert confidence_score(CS3, a).raw >= 0.0
        cs1 = confidence_score(CS1, a).raw
        assert 0.0 < cs1 <= 1.0
        assert int(np.argmax(softmax(a))) == argmax_pair(a)[0]


def test_scorer_formula_oracle():
    rng = np.random.default_rng(5)
    for _ in range(1000):
        k_classes = int(rng.integers(2, 31))
        a = rng.normal(0, 3, size=k_classes)
        order = sorted(range(k_classes), key=lambda i: (-a[i], i))
        k, j = order[0], order[1]
        exps = [math.exp(v) for v in a]
        total = math.fsum(exps)
        y = [e / total for e in exps]

        assert confidence_score(CS1, a).raw == pytest.approx(y[k], rel=1e-12)
        assert confidence_score(CS2, a).raw == a[k]
        assert confidence_score(CS3, a).raw == pytest.approx(a[k] - a[j], rel=1e-12, abs=1e-15)
        assert confidence_score(CS3, a).raw == pytest.approx(math.log(y[k] / y[j]), abs=1e-9)
        expected_cs4 = math.log(y[k] / math.fsum(y[i] for i in range(k_classes) if i != k))
        assert confidence_score(CS4, a).raw == pytest.approx(expected_cs4, rel=1e-12, abs=1e-12)
        assert cognizance_sum(LC_IDENTITY, a).raw == pytest.approx(math.fsum(a), rel=1e-12, abs=1e-12)
        assert cognizance_sum(LC_EXP, a).raw == pytest.approx(total, rel=1e-12)
        assert cognizance_sum(LC_QUADRATIC, a).raw == pytest.approx(math.fsum(v ** 2 for v in a), rel=1e-12)
        assert cognizance_sum(LC_CUBIC, a).raw == pytest.approx(math.fsum(v ** 3 for v in a), rel=1e-12, abs=1e-12)
        assert cognizance_sum(LC_ABSOLUTE, a).raw == pytest.approx(math.fsum(abs(v) for v in a), rel=1e-12)


def test_parse_scorer_list_uses_formulation_order():
    specs = parse_scorer_list('lc_cubic,cr,cs2')
    assert [spec.name for spec in specs] == ['cr', 'cs2', 'lc_cubic']
    assert [spec.name for spec in parse_scorer_list('all')] == [
        'cr', 'cs1', 'cs2', 'cs3', 'cs4', 'lc_identity', 'lc_exp', 'lc_quadratic', 'lc_cubic', 'lc_absolute']


def test_unknown_scorer_lists_valid_names():
    with pytest.raises(InvalidInputError) as e:
        get_scorer_spec('cs9')
    assert 'lc_absolute' in str(e.value)
    assert 'cr' in str(e.value)
