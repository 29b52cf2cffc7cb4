"""
Scalar scoring functions over a single penultimate (logit) vector.

Every function accepts anything convertible to a 1-D array of K >= 2 finite reals and returns plain Python
numbers, so they can be called concurrently without shared state.
"""
import math
import warnings
from typing import Iterable, Tuple

import numpy as np
from scipy.special import logsumexp
from scipy.special import softmax as _softmax

from .data import (
    COGNIZANCE_KINDS,
    CONFIDENCE_SCORE_KINDS,
    FLAG_CLAMPED,
    FLAG_LOG_DOMAIN,
    FLAG_UNRELIABLE,
    Orientation,
    ScoreValue,
    ScorerKind,
    ScorerSpec,
)
from ..shared.data import InvalidInputError, ScoreDivisionByZeroError, as_logit_vector

CS4_SATURATION = 1.0 - 1e-15
CS4_CEILING = math.log(CS4_SATURATION / (1.0 - CS4_SATURATION))
LOG_FLOAT_MAX = math.log(np.finfo(np.float64).max)


def softmax(logits: Iterable[float]) -> np.ndarray:
    """
    y_l = e^(a_l) / sum_i e^(a_i), evaluated after subtracting max(a) so large logits cannot overflow.
    """
    return _softmax(as_logit_vector(logits))


def argmax_pair(logits: Iterable[float]) -> Tuple[int, int]:
    """
    @return: (k, j), the indices of the largest and second largest penultimate values. Ties go to the lowest index.
    """
    a = as_logit_vector(logits)
    k = int(np.argmax(a))
    rest = a.copy()
    rest[k] = -np.inf
    j = int(np.argmax(rest))
    return k, j


def _make_score(raw: float, orientation: Orientation, flags=frozenset(), log_raw=None) -> ScoreValue:
    return ScoreValue(raw, orientation.apply(raw), orientation, frozenset(flags), log_raw)


def confidence_ratio(logits: Iterable[float], orientation: Orientation = Orientation.HIGH_MEANS_SIGN) -> ScoreValue:
    """
    cr = a_k / a_j. A zero denominator is an error; a negative one yields a value flagged `unreliable`.
    """
    a = as_logit_vector(logits)
    k, j = argmax_pair(a)
    denominator = float(a[j])
    if denominator == 0.0:
        raise ScoreDivisionByZeroError(
            f'Confidence ratio is undefined: the second largest logit (index {j}) is zero')
    flags = {FLAG_UNRELIABLE} if denominator < 0.0 else set()
    return _make_score(float(a[k]) / denominator, orientation, flags)


def confidence_score(spec: ScorerSpec, logits: Iterable[float]) -> ScoreValue:
    """
    cs1 = y_k, cs2 = a_k, cs3 = log(y_k / y_j) = a_k - a_j, cs4 = log(y_k / (1 - y_k)).

    cs3 is taken directly from the logits. cs4 is evaluated in log space as a_k - logsumexp(a_i, i != k) and is
    clamped (and flagged) once y_k reaches 1 - 1e-15.
    """
    if spec.kind not in CONFIDENCE_SCORE_KINDS:
        raise InvalidInputError(f'"{spec.name}" is not a confidence score')
    a = as_logit_vector(logits)
    k, j = argmax_pair(a)
    flags = set()
    match spec.kind:
        case ScorerKind.CS1:
            raw = float(_softmax(a)[k])
        case ScorerKind.CS2:
            raw = float(a[k])
        case ScorerKind.CS3:
            raw = float(a[k] - a[j])
        case _:
            raw = float(a[k] - logsumexp(np.delete(a, k)))
            if raw > CS4_CEILING:
                raw = CS4_CEILING
                flags.add(FLAG_CLAMPED)
    return _make_score(raw, spec.orientation, flags)


def cognizance_per_class(spec: ScorerSpec, logits: Iterable[float]) -> np.ndarray:
    """
    Elementwise latent cognizance g(a_i), each proportional to Pr[i, s | x].

    For the exponential cognizance, when sum_i e^(a_i) overflows the values are returned in the log domain (that is,
    the logits themselves) and a RuntimeWarning is issued, matching `cognizance_sum`. The power cognizances raise
    InvalidInputError when a value overflows.
    """
    if spec.kind not in COGNIZANCE_KINDS:
        raise InvalidInputError(f'"{spec.name}" is not a latent cognizance function')
    a = as_logit_vector(logits)
    match spec.kind:
        case ScorerKind.LC_IDENTITY:
            return a.copy()
        case ScorerKind.LC_EXP:
            if logsumexp(a) >= LOG_FLOAT_MAX:
                warnings.warn('Exponential cognizance overflowed; returning log-domain values', RuntimeWarning)
                return a.copy()
            return np.exp(a)
        case ScorerKind.LC_QUADRATIC:
            exponent = 2
        case ScorerKind.LC_CUBIC:
            exponent = 3
        case _:
            return np.abs(a)
    with np.errstate(over='ignore'):
        values = a ** exponent
    if not np.all(np.isfinite(values)):
        raise InvalidInputError(f'{spec.name} overflows: a logit is too large to raise to the power {exponent}')
    return values


def cognizance_sum(spec: ScorerSpec, logits: Iterable[float]) -> ScoreValue:
    """
    sum_i g(a_i), proportional to Pr[s | x], the probability that x is a sign at all.

    The exponential cognizance also carries log(sum_i e^(a_i)) in `log_raw`; if the plain sum overflows, `raw` holds
    that log-domain value and the result is flagged `log_domain`.
    """
    if spec.kind not in COGNIZANCE_KINDS:
        raise InvalidInputError(f'"{spec.name}" is not a latent cognizance function')
    a = as_logit_vector(logits)
    if spec.kind is ScorerKind.LC_EXP:
        log_raw = float(logsumexp(a))
        if log_raw >= LOG_FLOAT_MAX:
            return _make_score(log_raw, spec.orientation, {FLAG_LOG_DOMAIN}, log_raw)
        return _make_score(math.fsum(np.exp(a)), spec.orientation, log_raw=log_raw)
    try:
        total = math.fsum(cognizance_per_class(spec, a))
    except OverflowError:
        raise InvalidInputError(f'{spec.name} overflows: the sum of the cognizances exceeds the float range') from None
    return _make_score(total, spec.orientation)


def score(spec: ScorerSpec, logits: Iterable[float]) -> ScoreValue:
    """
    Applies any registered scorer to a logit vector.
    """
    if spec.kind is ScorerKind.CR:
        return confidence_ratio(logits, spec.orientation)
    if spec.kind in CONFIDENCE_SCORE_KINDS:
        return confidence_score(spec, logits)
    return cognizance_sum(spec, logits)
