from typing import Sequence

from .data import FoldPlan
from .reader import ANNOTATION_COLUMNS
from ..shared.data import LogitRecord, check_consistent_class_count
from ..shared.helpers import csv_text, write_csv, write_text_atomic


def logit_csv_text(records: Sequence[LogitRecord]) -> str:
    class_count = check_consistent_class_count(list(records))
    header = ANNOTATION_COLUMNS + [f'a_{k}' for k in range(class_count)]
    rows = [[record.sample_id, record.group_id, record.true_class, record.is_novel] + [float(a) for a in record.logits]
            for record in records]
    return csv_text(header, rows)


def write_logit_csv(path: str, records: Sequence[LogitRecord]):
    write_text_atomic(path, logit_csv_text(records))


def write_fold_plan_csv(path: str, plan: FoldPlan):
    rows = []
    for fold in plan.folds:
        rows.extend([fold.index, 'test', group_id] for group_id in fold.test_group_ids)
        rows.extend([fold.index, 'train', group_id] for group_id in fold.train_group_ids)
    write_csv(path, ['fold', 'role', 'group_id'], rows)
