from argparse import Namespace
from typing import Dict, List, Optional, Tuple

from .context import CommandContext
from ..density.builder import build_density_report
from ..density.data import GroupMode
from ..density.writer import write_boxplot_csv, write_density_csv, write_density_svg
from ..evaluation.builder import build_scored_samples
from ..evaluation.data import EvaluationResult, FoldMode, PositiveDefinition
from ..evaluation.evaluator import (
    EvaluationOptions,
    evaluate_folds,
    evaluate_scorer,
    strongest_scorers,
    summarize_result,
)
from ..evaluation.writer import (
    ScorerSummary,
    write_curve_csv,
    write_scored_csv,
    write_strongest_curves_csv,
    write_strongest_curves_svg,
    write_summary_csv,
    write_table_csv,
)
from ..logits.folds import make_fold_plan, ordered_group_ids, split_records_by_plan
from ..logits.reader import read_logit_csv
from ..logits.writer import write_fold_plan_csv, write_logit_csv
from ..scores.data import ScorerSpec, get_scorer_spec, parse_scorer_list
from ..shared.data import DegenerateEvaluationError, LogitRecord
from ..stats.comparison import group_comparison
from ..stats.writer import ScopedComparison, write_comparison_csv, write_normality_csv
from ..synth.config import SynthConfig, read_synth_config
from ..synth.generator import generate
from ..synth.protocol import default_fold_plan, run_fold_protocol
from ..synth.trainer import emit_logits, fit

FoldRecords = Dict[int, List[LogitRecord]]

# Synth command-line flags and the config fields they override.
SYNTH_FLAGS = {
    'seen_classes': 'n_classes_seen',
    'novel_classes': 'n_classes_novel',
    'dim': 'dim',
    'samples_per_class': 'samples_per_class',
    'separation': 'cluster_separation',
    'cluster_std': 'cluster_std',
    'seed': 'seed',
    'epochs': 'epochs',
    'learning_rate': 'learning_rate',
    'novel_placement': 'novel_placement',
    'n_groups': 'n_groups',
}

STRONGEST_COUNT = 4


def positive_definitions(text: str) -> List[PositiveDefinition]:
    match text:
        case 'novel':
            return [PositiveDefinition.NOVEL_ONLY]
        case 'wrong-or-novel':
            return [PositiveDefinition.WRONG_OR_NOVEL]
        case _:
            return [PositiveDefinition.NOVEL_ONLY, PositiveDefinition.WRONG_OR_NOVEL]


def synth_config_from_args(args: Namespace) -> SynthConfig:
    config = read_synth_config(args.config) if args.config else SynthConfig()
    overrides = {field: getattr(args, flag) for flag, field in SYNTH_FLAGS.items()
                 if getattr(args, flag, None) is not None}
    if getattr(args, 'no_safeguard', False):
        overrides['safeguard'] = False
    config = config.updated(**overrides)
    config.validate()
    return config


def _fold_settings(args: Namespace) -> Optional[Dict[str, object]]:
    if not getattr(args, 'folds', None) and not getattr(args, 'fold_protocol', False):
        return None
    return {'n_folds': args.folds, 'window': args.window, 'cycle': args.cycle, 'mode': getattr(args, 'fold_mode', None)}


def load_fold_records(args: Namespace, context: CommandContext) -> Tuple[List[LogitRecord], Optional[FoldRecords]]:
    """
    Reads the inputs. Several input files are taken as one test fold each; a single file is split with a rotating
    fold plan over its group ids when `--folds` is given.

    @return: All records, and the test records per fold (None when not evaluating by fold).
    """
    inputs = args.input if isinstance(args.input, list) else [args.input]
    if len(inputs) > 1:
        fold_records = {index: read_logit_csv(path) for index, path in enumerate(inputs, start=1)}
        records = [record for index in sorted(fold_records) for record in fold_records[index]]
        return records, fold_records
    records = read_logit_csv(inputs[0])
    if not getattr(args, 'folds', None):
        return records, None
    plan = make_fold_plan(ordered_group_ids(records), args.window, args.folds, args.cycle)
    write_fold_plan_csv(context.path('fold_plan.csv'), plan)
    return records, split_records_by_plan(records, plan)


def _write_curves(context: CommandContext, result: EvaluationResult, suffix: str = ''):
    for positive_definition, report in result.reports.items():
        write_curve_csv(context.path(f'curves/{result.spec.name}_{positive_definition}{suffix}.csv'), report)


def evaluate_all(records: List[LogitRecord],
                 fold_records: Optional[FoldRecords],
                 specs: List[ScorerSpec],
                 options: EvaluationOptions,
                 mode: FoldMode,
                 context: CommandContext) -> Tuple[List[ScorerSummary], List[EvaluationResult]]:
    summaries = []
    results = []
    for spec in specs:
        if fold_records is None:
            result = evaluate_scorer(records, spec, options)
            context.reporter.warnings(result.warnings)
            _write_curves(context, result)
            summaries.append((spec, summarize_result(result)))
            results.append(result)
            continue
        evaluation = evaluate_folds(fold_records, spec, mode, options)
        context.reporter.warnings(evaluation.warnings)
        if evaluation.pooled_result is not None:
            _write_curves(context, evaluation.pooled_result)
            results.append(evaluation.pooled_result)
        for fold_index, result in evaluation.fold_results.items():
            _write_curves(context, result, f'_f{fold_index:02d}')
        summaries.append((spec, evaluation.summaries))
    for spec, metrics in summaries:
        for positive_definition, summary in metrics.items():
            context.report('INFO', f'{spec.name} [{positive_definition}]: AUROC {summary.auroc:.4f}, '
                                   f'AUPR {summary.aupr:.4f}')
    return summaries, results


def cmd_synth(args: Namespace, context: CommandContext):
    config = synth_config_from_args(args)
    context.manifest.seed = config.seed
    context.manifest.folds = _fold_settings(args)
    if args.fold_protocol:
        plan = default_fold_plan(config, args.window) if not args.folds \
            else make_fold_plan([f'g{index + 1:02d}' for index in range(config.n_groups)], args.window, args.folds,
                                args.cycle)
        result = run_fold_protocol(config, plan)
        context.reporter.warnings(result.warnings)
        write_fold_plan_csv(context.path('fold_plan.csv'), plan)
        for fold_index, records in result.fold_records.items():
            write_logit_csv(context.path(f'logits_f{fold_index:02d}.csv'), records)
            context.report('INFO', f'fold {fold_index}: training accuracy {result.training_accuracy[fold_index]:.4f}')
        return
    train, test = generate(config)
    run = fit(train, config)
    context.report('INFO', f'Trained for {config.epochs} epoch(s): loss {run.losses[0]:.6f} -> {run.losses[-1]:.6f}, '
                           f'training accuracy {run.accuracy:.4f}')
    write_logit_csv(context.path('logits.csv'), emit_logits(run.model, test))
    write_logit_csv(context.path('train_logits.csv'), emit_logits(run.model, train))


def cmd_score(args: Namespace, context: CommandContext):
    spec = get_scorer_spec(args.scorer)
    context.manifest.scorers = [spec.name]
    records = read_logit_csv(args.input)
    samples, warnings = build_scored_samples(records, spec)
    context.reporter.warnings(warnings)
    write_scored_csv(context.path(f'scored_{spec.name}.csv'), samples)


def cmd_evaluate(args: Namespace, context: CommandContext):
    specs = parse_scorer_list(args.scorers)
    context.manifest.scorers = [spec.name for spec in specs]
    context.manifest.folds = _fold_settings(args)
    records, fold_records = load_fold_records(args, context)
    options = EvaluationOptions(positive_definitions(args.positive), args.thresholds)
    mode = FoldMode(args.fold_mode)
    summaries, _ = evaluate_all(records, fold_records, specs, options, mode, context)
    write_summary_csv(context.path('summary.csv'), summaries, mode if fold_records is not None else None)
    write_table_csv(context.path('table.csv'), summaries)


def compare_groups(records: List[LogitRecord],
                   fold_records: Optional[FoldRecords],
                   specs: List[ScorerSpec],
                   args: Namespace,
                   context: CommandContext) -> List[ScopedComparison]:
    scopes = [('all', records)]
    if fold_records is not None:
        scopes.extend((f'fold {index}', fold_records[index]) for index in sorted(fold_records))
    comparisons = []
    for spec in specs:
        for scope, scope_records in scopes:
            samples, _ = build_scored_samples(scope_records, spec)
            comparison = group_comparison(samples, spec, args.alpha, seed=args.seed)
            context.reporter.warnings(comparison.warnings)
            if scope == 'all':
                verdict = 'all differences significant' if comparison.all_significant else 'not all significant'
                context.report('INFO', f'{spec.name}: {verdict} at {args.alpha}')
            comparisons.append((scope, comparison))
    return comparisons


def cmd_stats(args: Namespace, context: CommandContext):
    specs = parse_scorer_list(args.scorers)
    context.manifest.scorers = [spec.name for spec in specs]
    context.manifest.seed = args.seed
    context.manifest.folds = _fold_settings(args)
    records, fold_records = load_fold_records(args, context)
    comparisons = compare_groups(records, fold_records, specs, args, context)
    write_comparison_csv(context.path('comparison.csv'), comparisons)
    write_normality_csv(context.path('normality.csv'), comparisons)


def write_densities(records: List[LogitRecord], specs: List[ScorerSpec], args: Namespace, context: CommandContext,
                    prefix: str = ''):
    mode = GroupMode(args.groups)
    for spec in specs:
        samples, _ = build_scored_samples(records, spec)
        report = build_density_report(samples, spec.name, mode, args.log, args.grid_size)
        context.reporter.warnings(report.warnings)
        write_density_csv(context.path(f'{prefix}density_{spec.name}.csv'), report)
        write_boxplot_csv(context.path(f'{prefix}boxplot_{spec.name}.csv'), report)
        if args.svg:
            write_density_svg(context.path(f'{prefix}density_{spec.name}.svg'), report)


def cmd_density(args: Namespace, context: CommandContext):
    specs = parse_scorer_list(args.scorers)
    context.manifest.scorers = [spec.name for spec in specs]
    write_densities(read_logit_csv(args.input), specs, args, context)


def cmd_report(args: Namespace, context: CommandContext):
    """
    Runs the whole pipeline on one dataset: evaluation summary and table, DR-FAR curves of the strongest scorers,
    group comparisons and densities. With `--config` the dataset is generated first.
    """
    specs = parse_scorer_list(args.scorers)
    context.manifest.scorers = [spec.name for spec in specs]
    context.manifest.seed = args.seed
    if args.config:
        config = read_synth_config(args.config)
        train, test = generate(config)
        run = fit(train, config)
        context.report('INFO', f'Generated synthetic dataset (seed {config.seed}); '
                               f'training accuracy {run.accuracy:.4f}')
        records = emit_logits(run.model, test)
        write_logit_csv(context.path('logits.csv'), records)
    else:
        records = read_logit_csv(args.input)

    options = EvaluationOptions(positive_definitions(args.positive), args.thresholds)
    summaries, results = evaluate_all(records, None, specs, options, FoldMode.POOLED, context)
    write_summary_csv(context.path('summary.csv'), summaries)
    write_table_csv(context.path('table.csv'), summaries)

    if all(PositiveDefinition.NOVEL_ONLY in result.reports for result in results):
        strongest = strongest_scorers(results, STRONGEST_COUNT)
        context.report('INFO', f'Strongest scorers: {", ".join(result.spec.name for result in strongest)}')
        write_strongest_curves_csv(context.path('strongest_curves.csv'), strongest)
        if args.svg:
            write_strongest_curves_svg(context.path('strongest_curves.svg'), strongest)

    try:
        comparisons = compare_groups(records, None, specs, args, context)
    except DegenerateEvaluationError as e:
        context.report('WARNING', f'Group comparison skipped: {e}')
    else:
        write_comparison_csv(context.path('comparison.csv'), comparisons)
        write_normality_csv(context.path('normality.csv'), comparisons)

    write_densities(records, specs, args, context, prefix='density/')
