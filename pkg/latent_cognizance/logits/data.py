from typing import List, NamedTuple


class Fold(NamedTuple):
    index: int  # 1-based
    test_group_ids: List[str]
    train_group_ids: List[str]


class FoldPlan(NamedTuple):
    """
    A grouped rotating fold plan. Fold f tests the `window` consecutive groups starting at group f, wrapping around
    after `cycle` groups; every other group is used for training.
    """
    group_ids: List[str]
    window: int
    n_folds: int
    cycle: int
    folds: List[Fold]

    @property
    def n_groups(self) -> int:
        return len(self.group_ids)

    def fold(self, index: int) -> Fold:
        return self.folds[index - 1]
