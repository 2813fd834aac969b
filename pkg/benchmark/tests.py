"""
Unit tests for the Benchmark application.
Tests cover the split and matching protocol, Pearson correlation, report
files, the experiment ledger and the management commands.
"""

import csv
import json
import math
import tempfile
import time
from io import StringIO
from pathlib import Path

import numpy as np
from django.contrib.auth.models import User
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings, tag
from django.urls import reverse

from concepts.bitsets import AttrSet, ObjSet
from concepts.context import FormalContext, gen_cointoss
from concepts.exceptions import ContextMismatchError
from concepts.formats import serialize_cxt
from concepts.generators import FaceFamily
from concepts.lattice import FormalConcept, build_lattice, intent_order
from concepts.tests import contranominal, toy3, worked3
from relevance.indices import conceptual_relevance, score_concept, score_lattice, stability_bruteforce

from .exceptions import InsufficientDataError, SplitError
from .harness import (
    EvalReport,
    ExperimentConfig,
    ScoreRow,
    avg_elapsed_time,
    evaluate_lattices,
    mirror_split,
    pearson,
    ratio_of_timings,
    run_comparison,
    run_experiment,
    shared_concepts,
    split_context,
)
from .ledger import record_report
from .models import ExperimentRun, SharedConceptScore
from .reports import format_number, write_concept_scores, write_experiment


def experiment_config(**overrides):
    return ExperimentConfig.from_settings(**overrides)


def read_csv(path):
    with open(path, encoding='utf-8', newline='') as handle:
        return list(csv.reader(handle))


class SplitTest(SimpleTestCase):
    """Test cases for horizontal context splits."""

    def setUp(self):
        """Create a coin-toss context to split."""
        self.ctx = gen_cointoss(10, 5, 0.5, seed=3)

    def test_even_split_is_a_partition(self):
        """Test that a split partitions the objects."""
        split = split_context(self.ctx, 0.5, seed=1)
        self.assertEqual(split.reference.n_objects, 5)
        self.assertEqual(split.test.n_objects, 5)
        ref, test = set(split.reference.objects), set(split.test.objects)
        self.assertFalse(ref & test)
        self.assertEqual(ref | test, set(self.ctx.objects))
        self.assertEqual(split.reference.attributes, self.ctx.attributes)
        self.assertEqual(split.test.attributes, self.ctx.attributes)

    def test_same_seed_same_split(self):
        """Test that the same seed gives the same split."""
        first = split_context(self.ctx, 0.5, seed=9)
        second = split_context(self.ctx, 0.5, seed=9)
        self.assertEqual(first.reference, second.reference)
        self.assertEqual(first.test, second.test)

    def test_sides_keep_original_order(self):
        """Test that both sides keep the original object order."""
        split = split_context(self.ctx, 0.3, seed=4)
        for side in (split.reference, split.test):
            positions = [self.ctx.objects.index(obj) for obj in side.objects]
            self.assertEqual(positions, sorted(positions))

    def test_restacking_reproduces_incidence(self):
        """Test that both sides together hold the original incidence."""
        split = split_context(self.ctx, 0.6, seed=2)
        restacked = dict(zip(split.reference.objects, split.reference.rows))
        restacked.update(zip(split.test.objects, split.test.rows))
        self.assertEqual(restacked, dict(zip(self.ctx.objects, self.ctx.rows)))

    def test_ceiling_of_reference_share(self):
        """Test that the reference side gets the rounded-up share."""
        split = split_context(toy3(), 0.34, seed=5)
        self.assertEqual(split.reference.n_objects, 2)
        self.assertEqual(split.test.n_objects, 1)

    def test_neither_side_is_empty(self):
        """Test that extreme ratios still leave an object on each side."""
        split = split_context(self.ctx, 0.99, seed=0)
        self.assertEqual(split.test.n_objects, 1)

    @override_settings(FCA_SPLIT_RATIO=0.2, FCA_SEED=17)
    def test_defaults_come_from_settings(self):
        """Test that ratio and seed defaults are read from settings."""
        split = split_context(self.ctx)
        self.assertEqual((split.ratio, split.seed), (0.2, 17))
        self.assertEqual(split.reference.n_objects, 2)

    def test_bad_ratio(self):
        """Test that ratios outside (0, 1) are rejected."""
        for ratio in (0.0, 1.0, -0.5, 1.5):
            with self.assertRaises(SplitError):
                split_context(self.ctx, ratio, seed=0)

    def test_too_few_objects(self):
        """Test that a single object cannot be split."""
        with self.assertRaises(SplitError):
            split_context(FormalContext(['g'], ['m'], [1]), 0.5, seed=0)

    def test_mirror_split(self):
        """Test the mirrored split."""
        split = mirror_split(self.ctx)
        self.assertEqual(split.reference, self.ctx)
        self.assertEqual(split.test.rows, self.ctx.rows)
        self.assertFalse(set(split.reference.objects) & set(split.test.objects))


class SharedConceptsTest(SimpleTestCase):
    """Test cases for matching concepts by intent."""

    def test_identical_lattices_match_completely(self):
        """Test that identical lattices share every concept."""
        lat = build_lattice(worked3())
        shared = shared_concepts(lat, lat)
        self.assertEqual(shared.n, len(lat))
        self.assertEqual([r for r, _ in shared], intent_order(lat))
        self.assertTrue(all(r == t for r, t in shared))

    def test_matching_is_a_bijection_on_shared_intents(self):
        """Test that shared concepts are matched one to one by intent."""
        split = split_context(gen_cointoss(40, 8, 0.4, seed=12), 0.5, seed=12)
        lat_r, lat_t = build_lattice(split.reference), build_lattice(split.test)
        shared = shared_concepts(lat_r, lat_t)
        intents_r = {c.intent.bits for c in lat_r}
        intents_t = {c.intent.bits for c in lat_t}
        self.assertEqual(shared.n, len(intents_r & intents_t))
        self.assertEqual(len({r for r, _ in shared}), shared.n)
        self.assertEqual(len({t for _, t in shared}), shared.n)
        for r, t in shared:
            self.assertEqual(lat_r[r].intent, lat_t[t].intent)

    def test_attribute_lists_must_match(self):
        """Test that lattices over different attributes are rejected."""
        with self.assertRaises(ContextMismatchError):
            shared_concepts(build_lattice(toy3()), build_lattice(contranominal(3)))


class PearsonTest(SimpleTestCase):
    """Test cases for the correlation and timing statistics."""

    def test_identity_and_reversal(self):
        """Test correlation of a list with itself and its reverse."""
        xs = [0.1, 0.4, 0.2, 0.9]
        self.assertAlmostEqual(pearson([(x, x) for x in xs]), 1.0, places=12)
        self.assertAlmostEqual(pearson([(x, 2.0 - x) for x in xs]), -1.0, places=12)

    def test_uncorrelated_example(self):
        """Test a zero correlation example."""
        self.assertAlmostEqual(pearson([(0, 0), (1, 1), (2, 0)]), 0.0, places=12)

    def test_constant_list_is_undefined(self):
        """Test that a constant list gives no correlation."""
        self.assertIsNone(pearson([(1, 0.5), (2, 0.5), (3, 0.5)]))
        self.assertIsNone(pearson([(0.3, 1), (0.3, 2)]))

    def test_needs_two_pairs(self):
        """Test that fewer than two pairs raise an error."""
        with self.assertRaises(InsufficientDataError):
            pearson([(1.0, 1.0)])

    def test_matches_direct_evaluation(self):
        """Test against the textbook formula on random lists."""
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            n = int(rng.integers(5, 40))
            xs = rng.random(n).tolist()
            ys = rng.random(n).tolist()
            x_mean, y_mean = sum(xs) / n, sum(ys) / n
            numerator = sum(x * y for x, y in zip(xs, ys)) - n * x_mean * y_mean
            denominator = math.sqrt(sum(x * x for x in xs) - n * x_mean ** 2) * math.sqrt(
                sum(y * y for y in ys) - n * y_mean ** 2
            )
            self.assertAlmostEqual(pearson(list(zip(xs, ys))), numerator / denominator, delta=1e-12)

    def test_invariant_under_positive_affine_maps(self):
        """Test invariance under positive affine maps."""
        rng = np.random.default_rng(7)
        for _ in range(100):
            xs = rng.random(25)
            ys = xs + rng.normal(0, 0.3, 25)
            base = pearson(list(zip(xs, ys)))
            scaled = pearson(list(zip(3.5 * xs + 2.0, 0.25 * ys - 1.0)))
            self.assertAlmostEqual(base, scaled, delta=1e-9)

    def test_avg_elapsed_time(self):
        """Test the mean elapsed time."""
        self.assertEqual(avg_elapsed_time([2.0, 2.0], [4.0]), 3.0)
        self.assertEqual(avg_elapsed_time([1.5], [1.5, 1.5]), 1.5)
        with self.assertRaises(InsufficientDataError):
            avg_elapsed_time([], [1.0])


class ExperimentTest(SimpleTestCase):
    """Test cases for the end-to-end evaluation protocol."""

    def setUp(self):
        """Create the experiment context."""
        self.ctx = gen_cointoss(12, 6, 0.5, seed=5)

    def test_mirror_split_gives_perfect_correlation(self):
        """Test that mirrored halves correlate perfectly."""
        for index in ('cr', 'stability'):
            for method in ('brute', 'dp'):
                report = run_experiment(self.ctx, experiment_config(index=index, split='mirror', stability_method=method))
                self.assertGreater(report.n, 2)
                self.assertEqual(report.dropped, 0)
                self.assertTrue(all(row.x == row.y for row in report.score_rows))
                self.assertAlmostEqual(report.xi, 1.0, delta=1e-9)

    def test_scores_match_standalone_relevance(self):
        """Test that experiment scores equal direct scoring."""
        split = split_context(gen_cointoss(30, 7, 0.4, seed=8), 0.5, seed=8)
        lat_r, lat_t = build_lattice(split.reference), build_lattice(split.test)
        report = evaluate_lattices(lat_r, lat_t, experiment_config(index='cr'))
        for row in report.score_rows:
            self.assertEqual(row.x, score_concept(lat_r, row.reference_id).value)
            self.assertEqual(row.y, score_concept(lat_t, row.test_id).value)
        self.assertEqual(len(report.timing_rows), 2 * report.n)

    def test_scores_are_deterministic(self):
        """Test that a fixed seed gives the same scores."""
        config = experiment_config(index='cr', seed=77)
        first = run_experiment(self.ctx, config)
        second = run_experiment(self.ctx, config)
        self.assertEqual(first.score_rows, second.score_rows)
        self.assertEqual(first.xi, second.xi)

    def test_single_shared_concept_leaves_correlation_undefined(self):
        """Test that one shared concept leaves the correlation undefined."""
        ctx = FormalContext.from_dict({'x': ['a'], 'y': ['b']}, attributes=['a', 'b'])
        report = run_experiment(ctx, experiment_config(index='cr', seed=1))
        self.assertEqual(report.n, 1)
        self.assertEqual(report.score_rows[0].intent, ('a', 'b'))
        self.assertIsNone(report.xi)
        self.assertEqual(report.xi_label, 'undefined')

    def test_stability_cap_drops_pairs(self):
        """Test that pairs above the stability cap are dropped."""
        split = split_context(gen_cointoss(20, 5, 0.6, seed=3), 0.5, seed=3)
        lat_r, lat_t = build_lattice(split.reference), build_lattice(split.test)
        config = experiment_config(index='stability', stability_method='brute', max_stability_extent=3)
        report = evaluate_lattices(lat_r, lat_t, config)
        self.assertEqual(report.n + report.dropped, shared_concepts(lat_r, lat_t).n)
        self.assertGreater(report.dropped, 0)
        for row in report.score_rows:
            self.assertLessEqual(len(lat_r[row.reference_id].extent), 3)
            self.assertLessEqual(len(lat_t[row.test_id].extent), 3)

    def test_comparison_runs_both_indices(self):
        """Test that a comparison evaluates both indices."""
        reports = run_comparison(self.ctx, experiment_config(seed=3))
        self.assertEqual(set(reports), {'cr', 'stability'})
        self.assertEqual(
            [row.intent for row in reports['cr'].score_rows],
            [row.intent for row in reports['stability'].score_rows],
        )
        self.assertGreater(ratio_of_timings(reports), 0)

    def test_ratio_of_timings_needs_both(self):
        """Test that the speedup needs both reports."""
        self.assertIsNone(ratio_of_timings({'cr': EvalReport('cr', 'arithmetic', tau=1.0)}))

    def test_config_validation(self):
        """Test that invalid experiment settings are rejected."""
        with self.assertRaises(SplitError):
            experiment_config(ratio=1.0).validate()
        with self.assertRaises(SplitError):
            experiment_config(split='vertical').validate()


class ReportTest(SimpleTestCase):
    """Test cases for the CSV writers."""

    def test_format_number(self):
        """Test number formatting for reports."""
        self.assertEqual(format_number(None), '')
        self.assertEqual(format_number(2), '2')
        self.assertEqual(format_number(1 / 3), '0.333333333333')
        self.assertEqual(format_number(1.0), '1')

    def test_concept_score_dump(self):
        """Test the concept score CSV."""
        rows = score_lattice(build_lattice(toy3()), index='cr', activation='arithmetic')
        with tempfile.TemporaryDirectory() as tmp:
            path = write_concept_scores(Path(tmp) / 'scores.csv', rows)
            data = read_csv(path)
        self.assertEqual(data[0], ['concept_id', 'extent_size', 'intent_size', 'alpha', 'beta', 'cr', 'stability', 'n_mingens'])
        self.assertEqual(data[2], ['1', '2', '3', '0', '0.333333333333', '0.166666666667', '', '2'])

    def test_experiment_files(self):
        """Test the files written for an experiment."""
        report = EvalReport('cr', 'arithmetic', score_rows=[ScoreRow(('a', 'b'), 0.5, 0.25, 3, 4)], tau=0.001)
        with tempfile.TemporaryDirectory() as tmp:
            paths = write_experiment(tmp, [report])
            names = sorted(p.name for p in paths)
            scores = read_csv(Path(tmp) / 'cr_scores.csv')
            summary = read_csv(Path(tmp) / 'summary.csv')
        self.assertEqual(names, ['cr_scores.csv', 'cr_timings.csv', 'summary.csv'])
        self.assertEqual(scores, [['intent', 'x', 'y'], ['a;b', '0.5', '0.25']])
        self.assertEqual(summary[0], ['index', 'activation', 'n', 'xi', 'tau_seconds'])
        self.assertEqual(summary[1][:4], ['cr', 'arithmetic', '1', 'undefined'])


class LedgerTest(TestCase):
    """Test cases for persisted experiment runs."""

    def setUp(self):
        """Run a small experiment to record."""
        self.config = experiment_config(index='cr', seed=5)
        self.report = run_experiment(gen_cointoss(16, 6, 0.5, seed=5), self.config)

    def test_record_report(self):
        """Test that a report is stored with its scores."""
        run = record_report(self.report, 'cointoss', self.config)
        self.assertEqual(ExperimentRun.objects.count(), 1)
        self.assertEqual(run.scores.count(), self.report.n)
        self.assertEqual(run.seed, 5)
        first = run.scores.first()
        self.assertEqual(first.intent, ','.join(self.report.score_rows[0].intent))
        self.assertEqual(first.x, self.report.score_rows[0].x)

    def test_summary_row(self):
        """Test the summary row of a stored run."""
        run = record_report(self.report, 'cointoss', self.config)
        self.assertEqual(run.get_summary_row()[:3], ['cr', 'arithmetic', self.report.n])

    def test_undefined_correlation_is_stored_as_null(self):
        """Test that an undefined correlation is stored as NULL."""
        report = EvalReport('cr', 'arithmetic', score_rows=[ScoreRow(('a',), 0.5, 0.5, 0, 0)])
        run = record_report(report, 'tiny', self.config)
        run.refresh_from_db()
        self.assertIsNone(run.xi)
        self.assertEqual(run.xi_label, 'undefined')
        self.assertEqual(str(run.scores.get()), '{a}')

    def test_runs_are_listed_newest_first(self):
        """Test run ordering."""
        older = record_report(self.report, 'first', self.config)
        newer = record_report(self.report, 'second', self.config)
        self.assertEqual(list(ExperimentRun.objects.all()), [newer, older])


class LedgerAdminTest(TestCase):
    """Test cases for browsing runs in the admin."""

    def setUp(self):
        """Create a superuser and a recorded run."""
        self.admin = User.objects.create_superuser('admin', 'admin@example.com', 'adminpass123')
        self.client.force_login(self.admin)
        config = experiment_config(index='cr', seed=5)
        self.run = record_report(run_experiment(gen_cointoss(12, 5, 0.5, seed=5), config), 'cointoss', config)

    def test_changelist(self):
        """Test the run changelist page."""
        response = self.client.get(reverse('admin:benchmark_experimentrun_changelist'))
        self.assertEqual(response.status_code, 200)
        self.assertContains(response, 'cointoss')

    def test_change_page_shows_scores(self):
        """Test that the change page lists shared concept scores."""
        response = self.client.get(reverse('admin:benchmark_experimentrun_change', args=[self.run.id]))
        self.assertEqual(response.status_code, 200)
        self.assertEqual(SharedConceptScore.objects.filter(run=self.run).count(), self.run.n)


class CommandTestMixin:
    """Helpers for running management commands in a scratch directory."""

    def setUp(self):
        """Create a scratch directory."""
        super().setUp()
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()
        super().tearDown()

    def write_context(self, ctx, name='context.cxt'):
        path = self.tmp / name
        path.write_text(serialize_cxt(ctx), encoding='utf-8')
        return str(path)

    def call(self, *args, **options):
        out, err = StringIO(), StringIO()
        call_command(*args, stdout=out, stderr=err, **options)
        return out.getvalue()

    def assertExitCode(self, code, *args, **options):
        with self.assertRaises(CommandError) as cm:
            self.call(*args, **options)
        self.assertEqual(cm.exception.returncode, code)


class GenContextCommandTest(CommandTestMixin, SimpleTestCase):
    """Test cases for the gencontext command."""

    def test_fixed_seed_gives_identical_files(self):
        """Test that a fixed seed writes identical files."""
        first, second = self.tmp / 'a.cxt', self.tmp / 'b.cxt'
        for path in (first, second):
            self.call('gencontext', objects='20', attributes='6', p='0.3', seed='11', output=str(path))
        self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_zero_probability(self):
        """Test that p = 0 writes an empty grid."""
        path = self.tmp / 'empty.cxt'
        self.call('gencontext', objects='4', attributes='3', p='0', seed='1', output=str(path))
        self.assertEqual(path.read_text(encoding='utf-8').splitlines()[-4:], ['...'] * 4)

    def test_cointoss_scale(self):
        """Test generating a context of the benchmark size."""
        path = self.tmp / 'cointoss.cxt'
        self.call('gencontext', objects='793', attributes='10', p='0.5', seed='42', output=str(path))
        lines = path.read_text(encoding='utf-8').splitlines()
        self.assertEqual(len(lines), 4 + 793 + 10 + 793)
        self.assertTrue(all(len(row) == 10 for row in lines[-793:]))

    def test_invalid_flags(self):
        """Test that invalid generator flags exit with an input error."""
        output = str(self.tmp / 'x.cxt')
        self.assertExitCode(1, 'gencontext', objects='4', attributes='3', p='1.5', seed='1', output=output)
        self.assertExitCode(1, 'gencontext', objects='-4', attributes='3', p='0.5', output=output)
        self.assertExitCode(1, 'gencontext', objects='four', attributes='3', p='0.5', output=output)
        self.assertExitCode(1, 'gencontext', attributes='3', p='0.5', output=output)


class BuildLatticeCommandTest(CommandTestMixin, SimpleTestCase):
    """Test cases for the buildlattice command."""

    def test_summary_line(self):
        """Test the printed lattice summary."""
        out = self.call('buildlattice', self.write_context(toy3()))
        self.assertEqual(out.strip(), '3 3 2')

    def test_json_output(self):
        """Test the JSON written by buildlattice."""
        output = self.tmp / 'lattice.json'
        self.call('buildlattice', self.write_context(worked3()), output=str(output))
        data = json.loads(output.read_text(encoding='utf-8'))
        self.assertEqual(len(data), 4)
        self.assertEqual(data[3], {'id': 3, 'extent': ['1', '2'], 'intent': ['a', 'b', 'c'], 'upper': [1, 2]})

    def test_csv_input(self):
        """Test building a lattice from a CSV table."""
        path = self.tmp / 'toy.csv'
        path.write_text(',a,b,c\n1,1,1,1\n2,1,1,1\n3,1,0,0\n', encoding='utf-8')
        self.assertEqual(self.call('buildlattice', str(path)).strip(), '3 3 2')

    def test_missing_file(self):
        """Test that a missing file exits with an input error."""
        self.assertExitCode(1, 'buildlattice', str(self.tmp / 'missing.cxt'))

    def test_malformed_file(self):
        """Test that a malformed file exits with an input error."""
        path = self.tmp / 'broken.cxt'
        path.write_text('B\n\n1\n2\no\na\nb\nX\n', encoding='utf-8')
        self.assertExitCode(1, 'buildlattice', str(path))

    def test_concept_cap(self):
        """Test that the concept cap exits with a resource error."""
        self.assertExitCode(2, 'buildlattice', self.write_context(toy3()), max_concepts='1')

    def test_bad_format_flag(self):
        """Test that an unknown format exits with a configuration error."""
        self.assertExitCode(3, 'buildlattice', self.write_context(toy3()), fmt='json')


class ScoreConceptsCommandTest(CommandTestMixin, SimpleTestCase):
    """Test cases for the scoreconcepts command."""

    def setUp(self):
        """Write the toy context."""
        super().setUp()
        self.input = self.write_context(toy3())
        self.output = self.tmp / 'scores.csv'

    def test_cr_scores(self):
        """Test the CR score file."""
        self.call('scoreconcepts', self.input, output=str(self.output), index='cr', activation='arithmetic')
        rows = read_csv(self.output)
        self.assertEqual(rows[2], ['1', '2', '3', '0', '0.333333333333', '0.166666666667', '', '2'])

    def test_stability_scores(self):
        """Test the stability score file."""
        self.call('scoreconcepts', self.input, output=str(self.output), index='stability')
        rows = read_csv(self.output)
        self.assertEqual(rows[1], ['0', '3', '1', '', '', '', '0.5', ''])
        self.assertEqual(rows[2], ['1', '2', '3', '', '', '', '1', ''])

    def test_top_concepts(self):
        """Test keeping only the best concepts."""
        self.call('scoreconcepts', self.input, output=str(self.output), index='stability', top='1')
        rows = read_csv(self.output)
        self.assertEqual([row[0] for row in rows[1:]], ['1'])

    def test_threshold(self):
        """Test keeping concepts above a threshold."""
        self.call('scoreconcepts', self.input, output=str(self.output), index='cr', threshold='0.1')
        rows = read_csv(self.output)
        self.assertEqual([row[0] for row in rows[1:]], ['1'])

    def test_unknown_activation(self):
        """Test that unknown or empty activations exit with a configuration error."""
        self.assertExitCode(3, 'scoreconcepts', self.input, output=str(self.output), activation='sigmoidal')
        self.assertExitCode(3, 'scoreconcepts', self.input, output=str(self.output), activation='')

    def test_unknown_index(self):
        """Test that unknown or empty indices exit with a configuration error."""
        self.assertExitCode(3, 'scoreconcepts', self.input, output=str(self.output), index='robustness')
        self.assertExitCode(3, 'scoreconcepts', self.input, output=str(self.output), index='')

    def test_bad_thread_count(self):
        """Test that a zero thread count is rejected."""
        self.assertExitCode(3, 'scoreconcepts', self.input, output=str(self.output), threads='0')

    def test_output_is_required(self):
        """Test that scoreconcepts needs an output file."""
        self.assertExitCode(3, 'scoreconcepts', self.input)


class EvaluateCommandTest(CommandTestMixin, TestCase):
    """Test cases for the evaluate command."""

    def setUp(self):
        """Write the evaluation context."""
        super().setUp()
        self.input = self.write_context(gen_cointoss(12, 6, 0.5, seed=5))

    def test_mirror_split_summary(self):
        """Test the printed summary for a mirrored split."""
        out = self.call('evaluate', self.input, output=str(self.tmp / 'out'), index='cr', split='mirror')
        index, n, xi, _ = out.splitlines()[0].split()
        self.assertEqual((index, xi), ('cr', '1.0'))
        self.assertGreater(int(n), 2)
        for name in ('cr_scores.csv', 'cr_timings.csv', 'summary.csv'):
            self.assertTrue((self.tmp / 'out' / name).is_file())

    def test_same_seed_same_scores(self):
        """Test that a fixed seed writes identical score files."""
        for name in ('first', 'second'):
            self.call('evaluate', self.input, output=str(self.tmp / name), seed='7')
        self.assertEqual(
            (self.tmp / 'first' / 'cr_scores.csv').read_bytes(),
            (self.tmp / 'second' / 'cr_scores.csv').read_bytes(),
        )

    def test_compare(self):
        """Test comparing both indices."""
        out = self.call('evaluate', self.input, output=str(self.tmp / 'out'), compare=True, stability_method='dp')
        lines = out.splitlines()
        self.assertTrue(lines[0].startswith('cr '))
        self.assertTrue(lines[1].startswith('stability '))
        self.assertTrue(lines[-1].startswith('speedup '))
        self.assertEqual(len(read_csv(self.tmp / 'out' / 'summary.csv')), 3)

    def test_record(self):
        """Test storing runs in the ledger."""
        self.call('evaluate', self.input, output=str(self.tmp / 'out'), record=True)
        run = ExperimentRun.objects.get()
        self.assertEqual(run.source, 'cointoss')
        self.assertEqual(run.scores.count(), run.n)

    def test_unsplittable_context(self):
        """Test that a single-object context exits with an input error."""
        path = self.write_context(FormalContext(['g'], ['m'], [1]), 'single.cxt')
        self.assertExitCode(1, 'evaluate', path, output=str(self.tmp / 'out'))

    def test_bad_ratio_and_seed(self):
        """Test that bad ratio and seed flags exit with a configuration error."""
        self.assertExitCode(3, 'evaluate', self.input, output=str(self.tmp / 'out'), ratio='1.5')
        self.assertExitCode(3, 'evaluate', self.input, output=str(self.tmp / 'out'), seed='abc')
        self.assertExitCode(3, 'evaluate', self.input, output=str(self.tmp / 'out'), split='vertical')


def best_time(func, repeats=5, loops=50):
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        for _ in range(loops):
            func()
        best = min(best, (time.perf_counter() - start) / loops)
    return best


@tag('slow')
class TimingTest(SimpleTestCase):
    """Wall-clock comparisons between CR and brute-force stability."""

    def test_cr_is_faster_than_brute_force_stability(self):
        """Test that CR is at least twice as fast as brute-force stability."""
        ctx = gen_cointoss(500, 12, 0.3, seed=500)
        for seed in (1, 2, 3):
            reports = run_comparison(ctx, experiment_config(seed=seed, stability_method='brute', max_stability_extent=12))
            self.assertGreater(reports['stability'].n, 0)
            self.assertGreaterEqual(reports['stability'].tau, 2 * reports['cr'].tau)

    def test_growth_on_contranominal_scales(self):
        """Test how CR and stability times grow on contranominal scales."""
        sizes = list(range(6, 15, 2))
        cr_times, stability_times = [], []
        for n in sizes:
            ctx = contranominal(n)
            bottom = FormalConcept(0, ObjSet.empty(n), AttrSet.full(n))
            faces = FaceFamily(0, tuple(AttrSet.from_indexes([m], n) for m in range(n)))
            cr_times.append(best_time(lambda: conceptual_relevance(ctx, bottom, faces)))
            top = FormalConcept(0, ObjSet.full(n), AttrSet.empty(n))
            stability_times.append(best_time(lambda: stability_bruteforce(ctx, top), repeats=3, loops=1))

        cr_slope = np.polyfit(np.log(sizes), np.log(cr_times), 1)[0]
        stability_slope = np.polyfit(sizes, np.log(stability_times), 1)[0]
        self.assertLessEqual(cr_slope, 1.3)
        self.assertGreater(stability_slope, 0.3)
