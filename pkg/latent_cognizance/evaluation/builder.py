from collections import Counter
from typing import Iterable, List, Optional, Tuple

from .data import ScoredSample
from ..scores.data import ScorerSpec
from ..scores.scorers import argmax_pair, score
from ..shared.data import InvalidRecordError, LatentCognizanceError, LogitRecord, OutcomeGroup


def classify_outcome(true_class: Optional[int], is_novel: bool, predicted_class: int) -> OutcomeGroup:
    if is_novel == (true_class is not None):
        raise InvalidRecordError('Exactly one of a true class or the novel flag must be given '
                                 f'(true class: {true_class}, novel: {is_novel})')
    if is_novel:
        return OutcomeGroup.NS
    return OutcomeGroup.CP if predicted_class == true_class else OutcomeGroup.IP


def build_scored_sample(record: LogitRecord, spec: ScorerSpec) -> ScoredSample:
    try:
        value = score(spec, record.logits)
        predicted_class, _ = argmax_pair(record.logits)
        group = classify_outcome(record.true_class, record.is_novel, predicted_class)
    except LatentCognizanceError as e:
        # Prefix the record location.
        raise type(e)(f'{record.location}: {e}') from e
    return ScoredSample(
        sample_id=record.sample_id,
        true_class=record.true_class,
        is_novel=record.is_novel,
        predicted_class=predicted_class,
        group=group,
        oriented_score=value.ranking,
        raw_score=value.raw,
        flags=value.flags,
        group_id=record.group_id,
    )


def build_scored_samples(records: Iterable[LogitRecord], spec: ScorerSpec) -> Tuple[List[ScoredSample], List[str]]:
    """
    Scores every record and joins it with its predicted class and outcome group.

    @return: The scored samples (in input order) and a list of warnings summarising flagged scores.
    """
    samples = [build_scored_sample(record, spec) for record in records]
    flag_counts = Counter(flag for sample in samples for flag in sample.flags)
    warnings = [f'{count} sample(s) scored by {spec.name} carry the "{flag}" flag'
                for flag, count in sorted(flag_counts.items())]
    return samples, warnings
