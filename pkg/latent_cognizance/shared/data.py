from enum import Enum
from typing import Iterable, List, NamedTuple, Optional, Sequence

import numpy as np


class LatentCognizanceError(RuntimeError):
    pass


class InvalidInputError(LatentCognizanceError):
    pass


class ScoreDivisionByZeroError(InvalidInputError):
    pass


class InvalidRecordError(LatentCognizanceError):
    pass


class DegenerateEvaluationError(LatentCognizanceError):
    pass


class InvalidFoldPlanError(LatentCognizanceError):
    pass


class ConfigError(LatentCognizanceError):
    pass


class LogitParseError(LatentCognizanceError):
    def __init__(self, line_number: int, message: str):
        super().__init__(f'line {line_number}: {message}')
        self.line_number = line_number


class OutcomeGroup(Enum):
    CP = 'CP'
    IP = 'IP'
    NS = 'NS'

    def __str__(self):
        return self.value


def as_logit_vector(values: Iterable[float]) -> np.ndarray:
    """
    Validates and returns a penultimate (logit) vector as a read-only float64 array.

    @param values: The K penultimate values a_1..a_K.
    @return: A 1-D float64 array of length K >= 2.
    """
    logits = np.array(values, dtype=np.float64)
    if logits.ndim != 1:
        raise InvalidInputError(f'Logit vector must be one-dimensional (got shape {logits.shape})')
    if len(logits) < 2:
        raise InvalidInputError(f'Logit vector needs at least 2 classes (got {len(logits)})')
    if not np.all(np.isfinite(logits)):
        raise InvalidInputError(f'Logit vector contains non-finite values: {logits.tolist()}')
    logits.setflags(write=False)
    return logits


class LogitRecord(NamedTuple):
    """
    One sample's penultimate vector plus its ground-truth annotations.
    Exactly one of `true_class` and `is_novel` is meaningful.
    """
    sample_id: str
    group_id: str
    true_class: Optional[int]
    is_novel: bool
    logits: np.ndarray
    line_number: Optional[int] = None

    @property
    def class_count(self) -> int:
        return len(self.logits)

    @property
    def location(self) -> str:
        if self.line_number is not None:
            return f'line {self.line_number} (sample "{self.sample_id}")'
        return f'sample "{self.sample_id}"'

    def with_logits(self, logits: Sequence[float]) -> 'LogitRecord':
        return self._replace(logits=as_logit_vector(logits))


def make_logit_record(sample_id: str,
                      group_id: str,
                      true_class: Optional[int],
                      is_novel: bool,
                      logits: Iterable[float],
                      line_number: Optional[int] = None) -> LogitRecord:
    if is_novel and true_class is not None:
        raise InvalidRecordError(f'Sample "{sample_id}" has both a true class and the novel flag')
    if not is_novel and true_class is None:
        raise InvalidRecordError(f'Sample "{sample_id}" has neither a true class nor the novel flag')
    if true_class is not None and true_class < 0:
        raise InvalidRecordError(f'Sample "{sample_id}" has a negative true class ({true_class})')
    return LogitRecord(sample_id, group_id, true_class, is_novel, as_logit_vector(logits), line_number)


def check_consistent_class_count(records: List[LogitRecord]) -> int:
    """
    @return: The shared class count K of the records.
    """
    if len(records) == 0:
        raise InvalidInputError('No logit records were given')
    class_count = records[0].class_count
    for record in records:
        if record.class_count != class_count:
            raise InvalidInputError(
                f'Inconsistent class count at {record.location}: expected {class_count}, got {record.class_count}')
    return class_count

