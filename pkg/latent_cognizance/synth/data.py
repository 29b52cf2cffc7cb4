from typing import List, NamedTuple, Optional

import numpy as np


class SynthSample(NamedTuple):
    sample_id: str
    group_id: str
    true_class: Optional[int]
    is_novel: bool
    features: np.ndarray


class LinearSoftmaxModel(NamedTuple):
    """
    A linear classifier whose penultimate output for an input x is `weights @ x + biases`.
    """
    weights: np.ndarray  # (n_classes, dim)
    biases: np.ndarray  # (n_classes,)

    @staticmethod
    def zeros(n_classes: int, dim: int) -> 'LinearSoftmaxModel':
        return LinearSoftmaxModel(np.zeros((n_classes, dim)), np.zeros(n_classes))

    @property
    def n_classes(self) -> int:
        return self.weights.shape[0]

    @property
    def dim(self) -> int:
        return self.weights.shape[1]

    def logits(self, features: np.ndarray) -> np.ndarray:
        """
        @param features: An (n, dim) matrix.
        @return: The (n, n_classes) logit matrix.
        """
        return features @ self.weights.T + self.biases

    def predict(self, features: np.ndarray) -> np.ndarray:
        return np.argmax(self.logits(features), axis=1)


class TrainingRun(NamedTuple):
    model: LinearSoftmaxModel
    losses: List[float]  # loss before the first epoch, then after every epoch
    learning_rates: List[float]  # the step size accepted in every epoch
    accuracy: float  # on the training samples
