import os
import sys
from typing import Iterable

from .manifest import MANIFEST_FILE_NAME, RunManifest, write_manifest

OUTPUT_DIR_VARIABLE = 'LATENT_COGNIZANCE_OUTPUT_DIR'
DEFAULT_OUTPUT_DIR = 'out'

LEVELS = ('INFO', 'WARNING', 'ERROR')


def default_output_dir() -> str:
    return os.environ.get(OUTPUT_DIR_VARIABLE, DEFAULT_OUTPUT_DIR)


class Reporter(object):
    """
    Writes `LEVEL: message` lines to stderr. Standard output is left to data.
    """

    def __init__(self, quiet: bool = False):
        self.quiet = quiet

    def report(self, level: str, message: str):
        assert level in LEVELS
        if self.quiet and level == 'INFO':
            return
        print(f'{level}: {message}', file=sys.stderr)

    def warnings(self, messages: Iterable[str]):
        for message in messages:
            self.report('WARNING', message)


class CommandContext(object):
    """
    The output directory of one command run, the files written into it and the manifest describing the run.
    """

    def __init__(self, out_dir: str, reporter: Reporter, manifest: RunManifest):
        self.out_dir = out_dir
        self.reporter = reporter
        self.manifest = manifest

    def path(self, relative_path: str) -> str:
        """
        Registers an output file and returns where to write it.
        """
        self.manifest.outputs.append(relative_path)
        path = os.path.join(self.out_dir, *relative_path.split('/'))
        os.makedirs(os.path.dirname(path), exist_ok=True)
        return path

    def report(self, level: str, message: str):
        self.reporter.report(level, message)

    def finish(self) -> str:
        path = os.path.join(self.out_dir, MANIFEST_FILE_NAME)
        write_manifest(path, self.manifest)
        self.report('INFO', f'Wrote {len(self.manifest.outputs)} file(s) and {MANIFEST_FILE_NAME} to {self.out_dir}')
        return path
