import re
from configparser import ConfigParser, Error as ConfigParserError
from typing import Dict

from ..shared.data import ConfigError

NOVEL_PLACEMENTS = ('midpoint', 'far')
_SECTION = 'synth'


class SynthConfig(object):
    def __init__(self,
                 n_classes_seen: int = 5,
                 n_classes_novel: int = 2,
                 dim: int = 16,
                 samples_per_class: int = 2000,
                 cluster_separation: float = 8.0,
                 cluster_std: float = 2.0,
                 seed: int = 0,
                 epochs: int = 200,
                 learning_rate: float = 0.1,
                 novel_placement: str = 'midpoint',
                 n_groups: int = 10,
                 safeguard: bool = True):
        self.n_classes_seen = n_classes_seen
        self.n_classes_novel = n_classes_novel
        self.dim = dim
        self.samples_per_class = samples_per_class
        self.cluster_separation = cluster_separation
        self.cluster_std = cluster_std
        self.seed = seed
        self.epochs = epochs
        self.learning_rate = learning_rate
        self.novel_placement = novel_placement
        self.n_groups = n_groups
        # Halve the learning rate whenever a step would increase the loss.
        self.safeguard = safeguard

    def validate(self):
        if self.n_classes_seen < 2:
            raise ConfigError(f'n_classes_seen must be at least 2 (got {self.n_classes_seen})')
        for name in ('n_classes_novel', 'dim', 'samples_per_class', 'epochs', 'n_groups'):
            if getattr(self, name) < 1:
                raise ConfigError(f'{name} must be at least 1 (got {getattr(self, name)})')
        # Zero is allowed for both.
        for name in ('cluster_separation', 'learning_rate'):
            if getattr(self, name) < 0.0:
                raise ConfigError(f'{name} must not be negative (got {getattr(self, name)})')
        if self.cluster_std <= 0.0:
            raise ConfigError(f'cluster_std must be positive (got {self.cluster_std})')
        if self.novel_placement not in NOVEL_PLACEMENTS:
            raise ConfigError(
                f'novel_placement must be one of {", ".join(NOVEL_PLACEMENTS)} (got "{self.novel_placement}")')

    def to_dict(self) -> Dict[str, object]:
        return dict(vars(self))

    def updated(self, **values) -> 'SynthConfig':
        """
        A copy with the given fields replaced. Unknown field names raise a `ConfigError`.
        """
        fields = self.to_dict()
        for key, value in values.items():
            if key not in fields:
                raise ConfigError(f'Unknown synth setting "{key}"; expected one of {", ".join(fields)}')
            fields[key] = value
        return SynthConfig(**fields)


def _convert(key: str, text: str, default):
    try:
        match default:
            case bool():
                return ConfigParser.BOOLEAN_STATES[text.lower()]
            case int():
                return int(text)
            case float():
                return float(text)
            case _:
                return text
    except (KeyError, ValueError):
        raise ConfigError(f'Invalid value for {key}: "{text}"')


def _load_config_file(file_path: str) -> ConfigParser:
    """
    Synth configs are flat `key=value` files with no section header, which ConfigParser does not accept.
    A section header is prepended before parsing. Comment lines start with `#` or `;`.
    """
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            lines = f.read().split('\n')
    except OSError as e:
        raise ConfigError(f'Cannot read synth config "{file_path}": {e}')
    lines = [line for line in lines if not re.match(r'^\s*\[.*\]\s*$', line)]
    contents = f'[{_SECTION}]\n' + '\n'.join(lines)

    config = ConfigParser(interpolation=None)
    try:
        config.read_string(contents, source=file_path)
    except ConfigParserError as e:
        raise ConfigError(f'Malformed synth config "{file_path}": {e}')
    return config


def read_synth_config(file_path: str, base: SynthConfig = None) -> SynthConfig:
    """
    Reads a flat key=value synth config on top of `base` (defaults when omitted).
    """
    base = base if base is not None else SynthConfig()
    defaults = base.to_dict()
    config = _load_config_file(file_path)
    values = dict()
    for key, text in config.items(_SECTION):
        if key not in defaults:
            raise ConfigError(f'Unknown synth setting "{key}" in "{file_path}"; expected one of {", ".join(defaults)}')
        values[key] = _convert(key, text.strip(), defaults[key])
    synth_config = base.updated(**values)
    synth_config.validate()
    return synth_config
