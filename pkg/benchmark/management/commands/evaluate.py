from concepts.formats import load_context

from ...harness import ExperimentConfig, ratio_of_timings, run_comparison, run_experiment
from ...ledger import record_report
from ...reports import write_experiment
from ..base import FcaCommand


class Command(FcaCommand):
    help = 'Split a context, score the shared concepts of both halves and report correlation and timing'
    output_required = True

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        self.add_scoring_arguments(parser)
        parser.add_argument('--output', help='Directory for the report CSV files')
        parser.add_argument('--ratio', help='Share of objects assigned to the reference half')
        parser.add_argument('--seed', help='Seed of the split shuffle')
        parser.add_argument('--split', help='Split mode: random or mirror')
        parser.add_argument('--compare', action='store_true', help='Evaluate cr and stability on the same split')
        parser.add_argument('--record', action='store_true', help='Store the reports in the experiment ledger')

    def run(self, config):
        ctx = load_context(config.input, config.fmt)
        experiment = ExperimentConfig(
            ratio=config.ratio,
            seed=config.seed,
            index=config.index,
            activation=config.activation,
            stability_method=config.stability_method,
            split=config.split,
            max_stability_extent=config.max_stability_extent,
            max_concepts=config.max_concepts,
            threads=config.threads,
        )
        if config.compare:
            reports = run_comparison(ctx, experiment)
        else:
            reports = {experiment.index: run_experiment(ctx, experiment)}

        write_experiment(config.output, reports.values())
        for report in reports.values():
            self.stdout.write(f'{report.index_name} {report.n} {report.xi_label} {report.tau:.6g}')
            if report.dropped:
                self.stdout.write(f'{report.index_name} dropped {report.dropped} concepts above the stability cap')
        if config.compare:
            ratio = ratio_of_timings(reports)
            self.stdout.write(f'speedup {"undefined" if ratio is None else f"{ratio:.3g}"}')

        if config.record:
            for report in reports.values():
                run = record_report(report, ctx.name, experiment)
                self.stdout.write(f'Recorded run #{run.id}')
