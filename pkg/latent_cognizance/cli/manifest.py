import json
from typing import Dict, List, Optional

from .. import __version__
from ..shared.data import ConfigError
from ..shared.helpers import write_text_atomic
from ..shared.semver import SemanticVersion

MANIFEST_FILE_NAME = 'manifest.json'
TOOL_NAME = 'latent_cognizance'


class RunManifest(object):
    """
    Everything needed to re-run a command: its arguments, inputs, scorers, fold settings and seed, plus the files it
    wrote (relative to the output directory). No timestamps are recorded, so identical runs write identical
    manifests.
    """

    def __init__(self,
                 command: str,
                 arguments: Dict[str, object],
                 inputs: Optional[List[str]] = None,
                 scorers: Optional[List[str]] = None,
                 folds: Optional[Dict[str, object]] = None,
                 seed: Optional[int] = None,
                 version: str = __version__):
        self.command = command
        self.arguments = arguments
        self.inputs = inputs if inputs is not None else []
        self.scorers = scorers if scorers is not None else []
        self.folds = folds
        self.seed = seed
        self.version = version
        self.outputs: List[str] = []

    def to_dict(self) -> Dict[str, object]:
        return {
            'tool': TOOL_NAME,
            'version': self.version,
            'command': self.command,
            'arguments': self.arguments,
            'inputs': self.inputs,
            'scorers': self.scorers,
            'folds': self.folds,
            'seed': self.seed,
            'outputs': sorted(self.outputs),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + '\n'


def write_manifest(path: str, manifest: RunManifest):
    write_text_atomic(path, manifest.to_json())


def read_manifest(path: str) -> RunManifest:
    try:
        with open(path, 'r', encoding='utf-8') as fp:
            payload = json.load(fp)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f'Cannot read manifest "{path}": {e}')
    if not isinstance(payload, dict) or payload.get('tool') != TOOL_NAME:
        raise ConfigError(f'"{path}" is not a {TOOL_NAME} run manifest')
    for key in ('version', 'command', 'arguments'):
        if key not in payload:
            raise ConfigError(f'Manifest "{path}" is missing "{key}"')
    manifest_version = SemanticVersion.parse(str(payload['version']))
    if not SemanticVersion.parse(__version__).can_read(manifest_version):
        raise ConfigError(
            f'Manifest "{path}" was written by version {manifest_version}, '
            f'which is newer than this tool ({__version__})')
    if not isinstance(payload['arguments'], dict):
        raise ConfigError(f'Manifest "{path}" has malformed arguments')
    manifest = RunManifest(
        command=payload['command'],
        arguments=payload['arguments'],
        inputs=payload.get('inputs'),
        scorers=payload.get('scorers'),
        folds=payload.get('folds'),
        seed=payload.get('seed'),
        version=str(payload['version']),
    )
    manifest.outputs = list(payload.get('outputs', []))
    return manifest
