from typing import List, Sequence, Tuple

import numpy as np
from scipy.special import log_softmax, softmax

from .config import SynthConfig
from .data import LinearSoftmaxModel, SynthSample, TrainingRun
from ..shared.data import InvalidInputError, LogitRecord, make_logit_record

# Halvings tried before an epoch is skipped.
MAX_HALVINGS = 60


def training_arrays(samples: Sequence[SynthSample], n_classes: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    @return: The (n, dim) feature matrix and the class label vector.
    """
    if len(samples) == 0:
        raise InvalidInputError('No training samples were given')
    for sample in samples:
        if sample.is_novel:
            raise InvalidInputError(f'Novel sample "{sample.sample_id}" cannot be used for training')
        if not 0 <= sample.true_class < n_classes:
            raise InvalidInputError(
                f'Sample "{sample.sample_id}" has class {sample.true_class}, outside 0..{n_classes - 1}')
    features = np.stack([sample.features for sample in samples]).astype(np.float64)
    labels = np.array([sample.true_class for sample in samples], dtype=np.int64)
    return features, labels


def cross_entropy(model: LinearSoftmaxModel, features: np.ndarray, labels: np.ndarray) -> float:
    log_probabilities = log_softmax(model.logits(features), axis=1)
    return float(-np.mean(log_probabilities[np.arange(len(labels)), labels]))


def cross_entropy_gradient(model: LinearSoftmaxModel, features: np.ndarray,
                           labels: np.ndarray) -> LinearSoftmaxModel:
    """
    The gradient of the mean cross-entropy with respect to the weights and biases, shaped like the model.
    """
    residuals = softmax(model.logits(features), axis=1)
    residuals[np.arange(len(labels)), labels] -= 1.0
    residuals /= len(labels)
    return LinearSoftmaxModel(residuals.T @ features, residuals.sum(axis=0))


def _step(model: LinearSoftmaxModel, gradient: LinearSoftmaxModel, learning_rate: float) -> LinearSoftmaxModel:
    return LinearSoftmaxModel(model.weights - learning_rate * gradient.weights,
                              model.biases - learning_rate * gradient.biases)


def accuracy(model: LinearSoftmaxModel, features: np.ndarray, labels: np.ndarray) -> float:
    return float(np.mean(model.predict(features) == labels))


def fit(samples: Sequence[SynthSample], config: SynthConfig) -> TrainingRun:
    """
    Full-batch gradient descent on the mean cross-entropy, starting from all-zero parameters.

    With `config.safeguard` on, a step that would increase the loss is retried with half the learning rate (the
    halved rate is kept for later epochs), so the recorded losses never increase.

    @param samples: The training samples; none may be novel.
    @param config: Supplies n_classes_seen, epochs, learning_rate and safeguard.
    @return: The trained model and its loss history.
    """
    features, labels = training_arrays(samples, config.n_classes_seen)
    model = LinearSoftmaxModel.zeros(config.n_classes_seen, features.shape[1])
    loss = cross_entropy(model, features, labels)
    losses = [loss]
    learning_rates = []
    learning_rate = config.learning_rate
    for _ in range(config.epochs):
        gradient = cross_entropy_gradient(model, features, labels)
        candidate = _step(model, gradient, learning_rate)
        candidate_loss = cross_entropy(candidate, features, labels)
        if config.safeguard:
            halvings = 0
            while candidate_loss > loss and halvings < MAX_HALVINGS:
                learning_rate /= 2.0
                halvings += 1
                candidate = _step(model, gradient, learning_rate)
                candidate_loss = cross_entropy(candidate, features, labels)
            if candidate_loss > loss:
                candidate, candidate_loss = model, loss
        model, loss = candidate, candidate_loss
        losses.append(loss)
        learning_rates.append(learning_rate)
    return TrainingRun(model, losses, learning_rates, accuracy(model, features, labels))


def train(samples: Sequence[SynthSample], config: SynthConfig) -> LinearSoftmaxModel:
    return fit(samples, config).model


def emit_logits(model: LinearSoftmaxModel, samples: Sequence[SynthSample]) -> List[LogitRecord]:
    """
    Runs the model on every sample and returns its raw penultimate output (no softmax) with the sample's
    annotations.
    """
    records = []
    for sample in samples:
        if len(sample.features) != model.dim:
            raise InvalidInputError(
                f'Sample "{sample.sample_id}" has {len(sample.features)} features; the model expects {model.dim}')
        logits = model.weights @ sample.features + model.biases
        records.append(make_logit_record(sample.sample_id, sample.group_id, sample.true_class, sample.is_novel, logits))
    return records
