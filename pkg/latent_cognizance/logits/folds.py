import re
from typing import Dict, Iterable, List, Optional, Sequence

from .data import Fold, FoldPlan
from ..shared.data import InvalidFoldPlanError, LogitRecord


def _natural_key(group_id: str):
    return [int(part) if part.isdigit() else part for part in re.split(r'(\d+)', group_id)]


def ordered_group_ids(records: Iterable[LogitRecord]) -> List[str]:
    """
    The distinct group ids of the sign (non-novel) records in natural order, so that `g2` comes before `g10`.
    """
    return sorted({record.group_id for record in records if not record.is_novel}, key=_natural_key)


def make_fold_plan(group_ids: Sequence[str],
                   window: int = 3,
                   n_folds: int = 10,
                   cycle: Optional[int] = None) -> FoldPlan:
    """
    Builds a grouped rotating fold plan.

    @param group_ids: The groups in rotation order.
    @param window: The number of consecutive groups tested in each fold.
    @param n_folds: The number of folds.
    @param cycle: The number of leading groups the test window rotates over. Defaults to `n_folds`; groups past the
    cycle are always trained on.
    @return: The fold plan.
    """
    group_ids = list(group_ids)
    n_groups = len(group_ids)
    if len(set(group_ids)) != n_groups:
        raise InvalidFoldPlanError(f'Group ids must be distinct (got {group_ids})')
    if window < 1:
        raise InvalidFoldPlanError(f'Test window must be at least 1 (got {window})')
    if window >= n_groups:
        raise InvalidFoldPlanError(
            f'Test window ({window}) must be smaller than the number of groups ({n_groups}) to leave training groups')
    if n_folds < 1:
        raise InvalidFoldPlanError(f'Number of folds must be at least 1 (got {n_folds})')
    if cycle is None:
        cycle = n_folds
    if not window <= cycle <= n_groups:
        raise InvalidFoldPlanError(
            f'Rotation cycle ({cycle}) must lie between the test window ({window}) and the number of groups '
            f'({n_groups})')

    folds = []
    for index in range(1, n_folds + 1):
        start = (index - 1) % cycle
        test = [group_ids[(start + offset) % cycle] for offset in range(window)]
        train = [group_id for group_id in group_ids if group_id not in test]
        folds.append(Fold(index, test, train))
    return FoldPlan(group_ids, window, n_folds, cycle, folds)


def _check_known_groups(records: Sequence[LogitRecord], plan: FoldPlan):
    known = set(plan.group_ids)
    for record in records:
        if not record.is_novel and record.group_id not in known:
            raise InvalidFoldPlanError(
                f'{record.location} belongs to group "{record.group_id}", which is not in the fold plan')


def split_records_by_plan(records: Sequence[LogitRecord], plan: FoldPlan) -> Dict[int, List[LogitRecord]]:
    """
    The test records of every fold: the sign records of the fold's test groups plus every novel record.
    Novel records are never trained on.

    @return: The test records keyed by 1-based fold index, each in input order.
    """
    _check_known_groups(records, plan)
    split = dict()
    for fold in plan.folds:
        test = set(fold.test_group_ids)
        split[fold.index] = [record for record in records if record.is_novel or record.group_id in test]
    return split


def train_records(records: Sequence, fold: Fold) -> List:
    """
    The non-novel entries of `records` (anything with `group_id` and `is_novel`) that belong to the fold's training
    groups.
    """
    train = set(fold.train_group_ids)
    return [record for record in records if not record.is_novel and record.group_id in train]
