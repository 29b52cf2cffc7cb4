from .data import Fold, FoldPlan
from .folds import make_fold_plan, ordered_group_ids, split_records_by_plan, train_records
from .reader import read_logit_csv
from .writer import logit_csv_text, write_fold_plan_csv, write_logit_csv
