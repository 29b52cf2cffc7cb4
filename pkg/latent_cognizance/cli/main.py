import argparse
import sys
from typing import List, Optional

from .commands import cmd_density, cmd_evaluate, cmd_report, cmd_score, cmd_stats, cmd_synth
from .context import CommandContext, Reporter, default_output_dir, OUTPUT_DIR_VARIABLE
from .manifest import RunManifest, read_manifest
from .. import __version__
from ..density.data import GroupMode
from ..density.kde import DEFAULT_GRID_SIZE
from ..evaluation.data import FoldMode
from ..shared.data import ConfigError, LatentCognizanceError
from ..stats.lilliefors import DEFAULT_SEED
from ..synth.config import NOVEL_PLACEMENTS

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA_ERROR = 2

# Arguments that describe how a run is invoked rather than what it computes.
_INVOCATION_ARGUMENTS = {'func', 'command', 'manifest', 'quiet', 'out'}


class ArgumentParser(argparse.ArgumentParser):
    """
    Exits with status 1 on usage errors.
    """

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


def _add_fold_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--folds', type=int, default=None,
                        help='Evaluate by rotating folds over the group ids (number of folds)')
    parser.add_argument('--window', type=int, default=3, help='Groups tested per fold')
    parser.add_argument('--cycle', type=int, default=None,
                        help='Number of leading groups the test window rotates over (default: the number of folds)')
    parser.add_argument('--fold-mode', choices=[str(mode) for mode in FoldMode], default=str(FoldMode.POOLED))


def _add_evaluation_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--scorers', default='all', help='"all" or a comma-separated list of scorer names')
    parser.add_argument('--positive', choices=['novel', 'wrong-or-novel', 'both'], default='both')
    parser.add_argument('--thresholds', type=int, default=None,
                        help='Number of interior thresholds per curve (default: every distinct score)')


def _add_density_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--groups', choices=[str(mode) for mode in GroupMode], default=str(GroupMode.SS_VS_NS))
    parser.add_argument('--log', action='store_true', help='Estimate densities of log10 of the raw scores')
    parser.add_argument('--grid-size', type=int, default=DEFAULT_GRID_SIZE)
    parser.add_argument('--svg', action='store_true', help='Also render SVG figures')


def _add_stats_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--alpha', type=float, default=0.01)
    parser.add_argument('--seed', type=int, default=DEFAULT_SEED, help='Seed of the normality test simulation')


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='latent_cognizance',
                            description='Confidence scores and latent cognizance for non-sign detection.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--quiet', action='store_true', help='Only report warnings and errors')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', default=None,
                        help=f'Output directory (default: ${OUTPUT_DIR_VARIABLE} or ./out)')
    subparsers = parser.add_subparsers(dest='command', required=True)

    synth = subparsers.add_parser('synth', parents=[common], help='Generate a synthetic dataset and emit logits')
    synth.add_argument('--config', default=None, help='Flat key=value synth config file')
    synth.add_argument('--seed', type=int, default=None)
    synth.add_argument('--seen-classes', type=int, default=None)
    synth.add_argument('--novel-classes', type=int, default=None)
    synth.add_argument('--dim', type=int, default=None)
    synth.add_argument('--samples-per-class', type=int, default=None)
    synth.add_argument('--separation', type=float, default=None)
    synth.add_argument('--cluster-std', type=float, default=None)
    synth.add_argument('--epochs', type=int, default=None)
    synth.add_argument('--learning-rate', type=float, default=None)
    synth.add_argument('--novel-placement', choices=NOVEL_PLACEMENTS, default=None)
    synth.add_argument('--n-groups', type=int, default=None)
    synth.add_argument('--no-safeguard', action='store_true', help='Never halve the learning rate')
    synth.add_argument('--fold-protocol', action='store_true',
                       help='Retrain per fold and write one logit file per fold')
    synth.add_argument('--folds', type=int, default=None)
    synth.add_argument('--window', type=int, default=3)
    synth.add_argument('--cycle', type=int, default=None)
    synth.set_defaults(func=cmd_synth)

    score = subparsers.add_parser('score', parents=[common], help='Score every record with one scorer')
    score.add_argument('--input', required=True)
    score.add_argument('--scorer', required=True)
    score.set_defaults(func=cmd_score)

    evaluate = subparsers.add_parser('evaluate', parents=[common], help='Threshold sweeps and areas per scorer')
    evaluate.add_argument('--input', nargs='+', required=True, help='A logit file, or one file per fold')
    _add_evaluation_arguments(evaluate)
    _add_fold_arguments(evaluate)
    evaluate.set_defaults(func=cmd_evaluate)

    stats = subparsers.add_parser('stats', parents=[common], help='CP/IP/NS group comparisons per scorer')
    stats.add_argument('--input', nargs='+', required=True, help='A logit file, or one file per fold')
    stats.add_argument('--scorers', default='all')
    _add_stats_arguments(stats)
    _add_fold_arguments(stats)
    stats.set_defaults(func=cmd_stats)

    density = subparsers.add_parser('density', parents=[common], help='Densities and boxplots per scorer')
    density.add_argument('--input', required=True)
    density.add_argument('--scorers', default='all')
    _add_density_arguments(density)
    density.set_defaults(func=cmd_density)

    report = subparsers.add_parser('report', parents=[common], help='Run every analysis on one dataset')
    source = report.add_mutually_exclusive_group(required=True)
    source.add_argument('--input', help='A logit file')
    source.add_argument('--config', help='A synth config; the dataset is generated first')
    source.add_argument('--manifest', help='Re-run the report described by a manifest')
    _add_evaluation_arguments(report)
    _add_stats_arguments(report)
    _add_density_arguments(report)
    report.set_defaults(func=cmd_report)
    return parser


def _replay_manifest(parser: ArgumentParser, args: argparse.Namespace) -> argparse.Namespace:
    manifest = read_manifest(args.manifest)
    if manifest.command != 'report':
        raise ConfigError(f'Manifest "{args.manifest}" describes a {manifest.command} run, not a report')
    replayed = parser.parse_args(['report', '--input', '-'])
    for key, value in manifest.arguments.items():
        if not hasattr(replayed, key):
            raise ConfigError(f'Manifest "{args.manifest}" has an unknown argument "{key}"')
        setattr(replayed, key, value)
    replayed.manifest = None
    replayed.quiet = args.quiet
    replayed.out = args.out
    return replayed


def _inputs(args: argparse.Namespace) -> List[str]:
    paths = []
    for name in ('input', 'config'):
        value = getattr(args, name, None)
        if isinstance(value, list):
            paths.extend(value)
        elif value:
            paths.append(value)
    return paths


def run(args: argparse.Namespace, reporter: Reporter) -> str:
    """
    Runs a parsed command and writes its manifest.

    @return: The manifest path.
    """
    arguments = {key: value for key, value in sorted(vars(args).items()) if key not in _INVOCATION_ARGUMENTS}
    manifest = RunManifest(args.command, arguments, inputs=_inputs(args))
    context = CommandContext(args.out or default_output_dir(), reporter, manifest)
    args.func(args, context)
    return context.finish()


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    reporter = Reporter(args.quiet)
    try:
        if getattr(args, 'manifest', None):
            args = _replay_manifest(parser, args)
        run(args, reporter)
    except LatentCognizanceError as e:
        reporter.report('ERROR', str(e))
        return EXIT_DATA_ERROR
    except OSError as e:
        reporter.report('ERROR', f'{e.strerror}: {e.filename}' if e.filename else str(e))
        return EXIT_DATA_ERROR
    return EXIT_OK
