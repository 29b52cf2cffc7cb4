from typing import List, Tuple

import numpy as np

from .config import SynthConfig
from .data import SynthSample


def _unit_directions(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    directions = rng.standard_normal((count, dim))
    return directions / np.linalg.norm(directions, axis=1, keepdims=True)


def class_means(config: SynthConfig, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """
    Places the seen class means on a sphere of radius `cluster_separation` around the origin.

    Novel means depend on `novel_placement`: `midpoint` puts novel class i halfway between seen classes 2i and 2i+1
    (indices wrap around), straddling a decision boundary; `far` draws further directions on the same sphere, away
    from every boundary.

    @return: The seen means (n_classes_seen x dim) and the novel means (n_classes_novel x dim).
    """
    seen = _unit_directions(rng, config.n_classes_seen, config.dim) * config.cluster_separation
    match config.novel_placement:
        case 'midpoint':
            pairs = [((2 * i) % config.n_classes_seen, (2 * i + 1) % config.n_classes_seen)
                     for i in range(config.n_classes_novel)]
            novel = np.array([(seen[a] + seen[b]) / 2.0 for a, b in pairs])
        case 'far':
            novel = _unit_directions(rng, config.n_classes_novel, config.dim) * config.cluster_separation
        case _:
            raise ValueError(f'Unhandled novel placement: {config.novel_placement}')
    return seen, novel


def _draw(rng: np.random.Generator, config: SynthConfig, means: np.ndarray, prefix: str, is_novel: bool,
          start: int = 0) -> List[SynthSample]:
    samples = []
    for class_index, mean in enumerate(means):
        features = mean + config.cluster_std * rng.standard_normal((config.samples_per_class, config.dim))
        for row in features:
            index = start + len(samples)
            samples.append(SynthSample(
                sample_id=f'{prefix}{index + 1:05d}',
                group_id=f'g{index % config.n_groups + 1:02d}',
                true_class=None if is_novel else class_index,
                is_novel=is_novel,
                features=row,
            ))
    return samples


def generate(config: SynthConfig) -> Tuple[List[SynthSample], List[SynthSample]]:
    """
    Draws isotropic Gaussian clusters around the class means.

    Both sets hold `samples_per_class` samples of every seen class; the test set also holds `samples_per_class`
    samples of every novel class, after the seen ones. Group ids run round-robin over `n_groups` groups (`g01`,
    `g02`, ...) in sample order. Output depends only on the config.

    @return: The training and test samples.
    """
    config.validate()
    rng = np.random.default_rng(config.seed)
    seen, novel = class_means(config, rng)
    train = _draw(rng, config, seen, 'tr', False)
    test = _draw(rng, config, seen, 'te', False)
    test.extend(_draw(rng, config, novel, 'te', True, start=len(test)))
    return train, test
