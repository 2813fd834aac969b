"""
Evaluation protocol for concept relevance indices.

A context is split horizontally into a reference half and a test half, a
lattice is built for each, concepts with the same intent on both sides are
paired, and every index is scored on both members of each pair. Agreement is
measured with Pearson's coefficient over the paired scores and speed with the
mean per-concept elapsed time.
"""
from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import NamedTuple, Sequence

import numpy as np
from django.conf import settings

from concepts.context import FormalContext, seeded_generator
from concepts.exceptions import ContextMismatchError
from concepts.lattice import ConceptLattice, build_lattice, intent_order
from relevance.activations import get_activation
from relevance.indices import (
    LATTICE_DP,
    resolve_index,
    resolve_stability_method,
    score_concept,
    stability_bruteforce,
    stability_lattice,
)

from .exceptions import BenchmarkError, InsufficientDataError, SplitError

logger = logging.getLogger(__name__)

SPLIT_MODES = ('random', 'mirror')
UNDEFINED = 'undefined'


@dataclass(frozen=True)
class SplitPair:
    reference: FormalContext
    test: FormalContext
    seed: int | None
    ratio: float
    mode: str = 'random'


@dataclass(frozen=True)
class SharedConceptPairs:
    pairs: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


class ScoreRow(NamedTuple):
    intent: tuple[str, ...]
    x: float
    y: float
    reference_id: int
    test_id: int


class TimingRow(NamedTuple):
    side: str
    concept_id: int
    seconds: float


@dataclass
class EvalReport:
    index_name: str
    activation: str
    score_rows: list[ScoreRow] = field(default_factory=list)
    xi: float | None = None
    tau: float = 0.0
    timing_rows: list[TimingRow] = field(default_factory=list)
    dropped: int = 0

    @property
    def n(self) -> int:
        return len(self.score_rows)

    @property
    def xi_label(self) -> str:
        return UNDEFINED if self.xi is None else repr(self.xi)


@dataclass(frozen=True)
class ExperimentConfig:
    ratio: float
    seed: int
    index: str
    activation: str
    stability_method: str
    split: str = 'random'
    max_stability_extent: int = 24
    max_concepts: int = 5_000_000
    threads: int = 1

    @classmethod
    def from_settings(cls, **overrides):
        values = dict(
            ratio=settings.FCA_SPLIT_RATIO,
            seed=settings.FCA_SEED,
            index=settings.FCA_DEFAULT_INDEX,
            activation=settings.FCA_DEFAULT_ACTIVATION,
            stability_method=settings.FCA_STABILITY_METHOD,
            max_stability_extent=settings.FCA_MAX_STABILITY_EXTENT,
            max_concepts=settings.FCA_MAX_CONCEPTS,
            threads=settings.FCA_THREADS,
        )
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def validate(self) -> ExperimentConfig:
        if not 0 < self.ratio < 1:
            raise SplitError(f'split ratio must lie strictly between 0 and 1, got {self.ratio}')
        if self.split not in SPLIT_MODES:
            raise SplitError(f'unknown split mode {self.split!r}; choose one of {", ".join(SPLIT_MODES)}')
        if self.threads < 1:
            raise BenchmarkError(f'thread count must be at least 1, got {self.threads}')
        resolve_index(self.index)
        resolve_stability_method(self.stability_method)
        get_activation(self.activation)
        return self


def split_context(ctx: FormalContext, ratio: float | None = None, seed: int | None = None) -> SplitPair:
    """
    Shuffle the objects with a seeded PCG64 generator and cut the sequence.

    The reference side takes the first ⌈ratio·|G|⌉ shuffled objects, clamped
    so that neither side is empty; each side keeps the original object order.
    """
    ratio = settings.FCA_SPLIT_RATIO if ratio is None else ratio
    seed = settings.FCA_SEED if seed is None else seed
    if not 0 < ratio < 1:
        raise SplitError(f'split ratio must lie strictly between 0 and 1, got {ratio}')
    n = ctx.n_objects
    if n < 2:
        raise SplitError(f'a context with {n} objects cannot be split')

    order = seeded_generator(seed).permutation(n).tolist()
    cut = min(max(math.ceil(round(ratio * n, 9)), 1), n - 1)
    reference = ctx.subcontext(sorted(order[:cut]), name=f'{ctx.name}-reference')
    test = ctx.subcontext(sorted(order[cut:]), name=f'{ctx.name}-test')
    logger.debug(f'Split {n} objects into {reference.n_objects} reference and {test.n_objects} test objects')
    return SplitPair(reference, test, seed, ratio)


def mirror_split(ctx: FormalContext) -> SplitPair:
    """Duplicate every object and send the copies to the test side."""
    test = FormalContext(
        [f'{obj}#2' for obj in ctx.objects], ctx.attributes, ctx.rows, name=f'{ctx.name}-mirror'
    )
    return SplitPair(ctx, test, None, 0.5, mode='mirror')


def shared_concepts(lat_r: ConceptLattice, lat_t: ConceptLattice) -> SharedConceptPairs:
    """Pair concepts with equal intents, ordered by intent size then bit pattern."""
    if lat_r.context.attributes != lat_t.context.attributes:
        raise ContextMismatchError('reference and test lattices have different attribute lists')
    pairs = []
    for ref_id in intent_order(lat_r):
        test_id = lat_t.find_intent(lat_r.concepts[ref_id].intent.bits)
        if test_id is not None:
            pairs.append((ref_id, test_id))
    return SharedConceptPairs(tuple(pairs))


def pearson(pairs: Sequence[tuple[float, float]]) -> float | None:
    """
    Pearson's coefficient in its sum form.

    Returns None when either list has zero variance.
    """
    if len(pairs) < 2:
        raise InsufficientDataError(f'Pearson correlation needs at least 2 pairs, got {len(pairs)}')
    data = np.asarray(pairs, dtype=float)
    xs, ys = data[:, 0], data[:, 1]
    if np.all(xs == xs[0]) or np.all(ys == ys[0]):
        return None
    n = len(xs)
    x_mean, y_mean = xs.mean(), ys.mean()
    numerator = np.dot(xs, ys) - n * x_mean * y_mean
    x_spread = np.dot(xs, xs) - n * x_mean ** 2
    y_spread = np.dot(ys, ys) - n * y_mean ** 2
    if x_spread <= 0 or y_spread <= 0:
        return None
    xi = numerator / math.sqrt(x_spread * y_spread)
    return float(min(1.0, max(-1.0, xi)))


def avg_elapsed_time(t_ref: Sequence[float], t_test: Sequence[float]) -> float:
    if not len(t_ref) or not len(t_test):
        raise InsufficientDataError('average elapsed time needs timings on both sides')
    return 0.5 * (float(np.mean(t_ref)) + float(np.mean(t_test)))


def _timed_scores(lat: ConceptLattice, concept_ids: list[int],
                  config: ExperimentConfig) -> tuple[list[float], list[float]]:
    if config.index == 'stability' and resolve_stability_method(config.stability_method) == LATTICE_DP:
        # the dynamic programme scores the whole lattice at once; its cost
        # is shared equally by all concepts
        start = time.perf_counter()
        scores = stability_lattice(lat)
        share = (time.perf_counter() - start) / len(lat)
        return [scores[cid].value for cid in concept_ids], [share] * len(concept_ids)

    if config.index == 'cr':
        def score(cid):
            return score_concept(lat, cid, config.activation).value
    else:
        def score(cid):
            return stability_bruteforce(lat.context, lat.concepts[cid], config.max_stability_extent).value

    def timed(cid):
        start = time.perf_counter()
        value = score(cid)
        return value, time.perf_counter() - start

    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        results = list(pool.map(timed, concept_ids))
    return [value for value, _ in results], [seconds for _, seconds in results]


def evaluate_lattices(lat_r: ConceptLattice, lat_t: ConceptLattice, config: ExperimentConfig) -> EvalReport:
    """Score the shared concepts of two lattices and assemble the report."""
    config.validate()
    shared = shared_concepts(lat_r, lat_t)
    pairs = list(shared)

    dropped = 0
    if config.index == 'stability' and resolve_stability_method(config.stability_method) != LATTICE_DP:
        cap = config.max_stability_extent
        kept = [
            (r, t) for r, t in pairs
            if len(lat_r.concepts[r].extent) <= cap and len(lat_t.concepts[t].extent) <= cap
        ]
        dropped = len(pairs) - len(kept)
        pairs = kept
        if dropped:
            logger.warning(f'Dropped {dropped} shared concepts with extents above the stability cap of {cap}')

    x, t_ref = _timed_scores(lat_r, [r for r, _ in pairs], config)
    y, t_test = _timed_scores(lat_t, [t for _, t in pairs], config)

    attributes = lat_r.context
    report = EvalReport(config.index, config.activation, dropped=dropped)
    for (r, t), xi, yi in zip(pairs, x, y):
        intent = tuple(attributes.attribute_names(lat_r.concepts[r].intent))
        report.score_rows.append(ScoreRow(intent, xi, yi, r, t))
    report.timing_rows.extend(TimingRow('reference', r, s) for (r, _), s in zip(pairs, t_ref))
    report.timing_rows.extend(TimingRow('test', t, s) for (_, t), s in zip(pairs, t_test))

    if report.n >= 2:
        report.xi = pearson([(row.x, row.y) for row in report.score_rows])
    if report.n:
        report.tau = avg_elapsed_time(t_ref, t_test)
    if report.xi is None:
        logger.warning(f'Correlation for {config.index} is undefined over {report.n} shared concepts')

    logger.info(
        f'Evaluated {config.index} on {report.n} shared concepts: xi={report.xi_label} tau={report.tau:.6g}s'
    )
    return report


def make_split(ctx: FormalContext, config: ExperimentConfig) -> SplitPair:
    if config.split == 'mirror':
        return mirror_split(ctx)
    return split_context(ctx, config.ratio, config.seed)


def build_split_lattices(split: SplitPair, config: ExperimentConfig) -> tuple[ConceptLattice, ConceptLattice]:
    return (
        build_lattice(split.reference, max_concepts=config.max_concepts),
        build_lattice(split.test, max_concepts=config.max_concepts),
    )


def run_experiment(ctx: FormalContext, config: ExperimentConfig | None = None) -> EvalReport:
    """Split, build both lattices, pair shared concepts and score them."""
    config = (config or ExperimentConfig.from_settings()).validate()
    split = make_split(ctx, config)
    lat_r, lat_t = build_split_lattices(split, config)
    return evaluate_lattices(lat_r, lat_t, config)


def run_comparison(ctx: FormalContext, config: ExperimentConfig | None = None) -> dict[str, EvalReport]:
    """Evaluate CR and stability on one split and one pair of lattices."""
    config = (config or ExperimentConfig.from_settings()).validate()
    split = make_split(ctx, config)
    lat_r, lat_t = build_split_lattices(split, config)
    return {
        index: evaluate_lattices(lat_r, lat_t, replace(config, index=index))
        for index in ('cr', 'stability')
    }


def ratio_of_timings(reports: dict[str, EvalReport]) -> float | None:
    """How many times faster CR ran than stability, per concept."""
    cr, stability = reports.get('cr'), reports.get('stability')
    if cr is None or stability is None or not cr.tau:
        return None
    return stability.tau / cr.tau
