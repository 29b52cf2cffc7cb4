import re
from typing import Tuple

from .data import ConfigError


class SemanticVersion(object):
    def __init__(self, version: Tuple[int, int, int]):
        self.major, self.minor, self.patch = version

    @classmethod
    def parse(cls, text: str) -> 'SemanticVersion':
        match = re.fullmatch(r'\s*(\d+)\.(\d+)\.(\d+)\s*', text)
        if match is None:
            raise ConfigError(f'"{text}" is not a semantic version (expected MAJOR.MINOR.PATCH)')
        return cls((int(match.group(1)), int(match.group(2)), int(match.group(3))))

    def can_read(self, other: 'SemanticVersion') -> bool:
        """
        Whether artifacts written by version `other` can be reproduced by this version.
        Anything from the same or an older major version is accepted.
        """
        return other.major <= self.major

    def __str__(self):
        return f'{self.major}.{self.minor}.{self.patch}'
