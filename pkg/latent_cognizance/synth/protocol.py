from typing import Dict, List, Optional

from .config import SynthConfig
from .generator import generate
from .trainer import emit_logits, fit
from ..logits.data import FoldPlan
from ..logits.folds import make_fold_plan, ordered_group_ids, train_records
from ..shared.data import LogitRecord


class FoldProtocolResult(object):
    def __init__(self, plan: FoldPlan):
        self.plan = plan
        self.fold_records: Dict[int, List[LogitRecord]] = dict()
        self.training_accuracy: Dict[int, float] = dict()
        self.warnings: List[str] = []


def default_fold_plan(config: SynthConfig, window: int = 3) -> FoldPlan:
    group_ids = [f'g{index + 1:02d}' for index in range(config.n_groups)]
    return make_fold_plan(group_ids, window=window, n_folds=config.n_groups)


def run_fold_protocol(config: SynthConfig, plan: Optional[FoldPlan] = None) -> FoldProtocolResult:
    """
    Grouped cross-validation on one synthetic dataset. The seen-class samples of both generated sets are pooled;
    each fold trains a fresh model on its training groups and emits logits for its test groups plus every novel
    sample. Sample ids are prefixed with the fold (`f01/`, `f02/`, ...) so folds can share one file.

    @param config: The synthetic dataset and training settings.
    @param plan: The fold plan over the dataset's group ids; defaults to a window of 3 rotating over all groups.
    @return: The per-fold test logits.
    """
    train, test = generate(config)
    signs = train + [sample for sample in test if not sample.is_novel]
    novel = [sample for sample in test if sample.is_novel]
    if plan is None:
        plan = default_fold_plan(config)
    unplanned = set(ordered_group_ids(signs)) - set(plan.group_ids)
    result = FoldProtocolResult(plan)
    if unplanned:
        result.warnings.append(f'Groups outside the fold plan are never tested: {", ".join(sorted(unplanned))}')

    for fold in plan.folds:
        run = fit(train_records(signs, fold), config)
        result.training_accuracy[fold.index] = run.accuracy
        test_groups = set(fold.test_group_ids)
        fold_test = [sample for sample in signs if sample.group_id in test_groups] + novel
        prefix = f'f{fold.index:02d}/'
        result.fold_records[fold.index] = [record._replace(sample_id=prefix + record.sample_id)
                                           for record in emit_logits(run.model, fold_test)]
    return result
