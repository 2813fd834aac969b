"""
Conceptual Relevance and stability indices.

The CR score of a concept c = (A, B) combines two ratios:

* α, the share of intent attributes whose removal changes the extent
  ((B \\ {m})′ ≠ A), and
* β, the number of minimal generators normalised by the number of proper
  nonempty subsets of B, 2^|B| − 2, counted only when there are at least two
  generators and two attributes.

Stability is the share of extent subsets whose derivation is still B. It is
computed either by enumerating all 2^|A| subsets or exactly from the lattice.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from django.conf import settings

from concepts.bitsets import AttrSet, full_mask, iter_indexes
from concepts.context import FormalContext
from concepts.exceptions import ContextMismatchError
from concepts.generators import FaceFamily, MinGenSet, face_family, minimal_generators
from concepts.lattice import ConceptLattice, FormalConcept

from .activations import get_activation
from .exceptions import AttributeNotInIntentError, ExtentTooLargeError, UnknownIndexError

logger = logging.getLogger(__name__)

BRUTE_FORCE = 'brute-force'
LATTICE_DP = 'lattice-dp'

INDEX_NAMES = ('cr', 'stability')
STABILITY_METHODS = {'brute': BRUTE_FORCE, 'dp': LATTICE_DP}


@dataclass(frozen=True, slots=True)
class RelevanceScore:
    alpha: float
    beta: float
    value: float
    activation_name: str
    n_mingens: int


@dataclass(frozen=True, slots=True)
class StabilityScore:
    value: float
    method: str
    exact: Fraction


def _relevance_mask(ctx: FormalContext, c: FormalConcept) -> int:
    # prefix[i] & suffix[i + 1] is (B \ {m_i})′ without re-deriving per attribute
    attrs = list(c.intent)
    columns = ctx.columns
    everyone = full_mask(ctx.n_objects)
    prefix = [everyone]
    for m in attrs:
        prefix.append(prefix[-1] & columns[m])
    suffix = [everyone] * (len(attrs) + 1)
    for i in range(len(attrs) - 1, -1, -1):
        suffix[i] = suffix[i + 1] & columns[attrs[i]]

    extent = c.extent.bits
    mask = 0
    for i, m in enumerate(attrs):
        if prefix[i] & suffix[i + 1] != extent:
            mask |= 1 << m
    return mask


def is_relevant_attribute(ctx: FormalContext, c: FormalConcept, m: int) -> bool:
    """True when dropping ``m`` from the intent lets the extent grow."""
    if m not in c.intent:
        raise AttributeNotInIntentError(f'attribute {m} is not in the intent of concept {c.id}')
    return ctx.common_objects(c.intent.bits & ~(1 << m)) != c.extent.bits


def relevant_attributes(ctx: FormalContext, c: FormalConcept) -> AttrSet:
    return AttrSet(_relevance_mask(ctx, c), ctx.n_attributes)


def alpha_in(ctx: FormalContext, c: FormalConcept) -> float:
    size = len(c.intent)
    if size == 0:
        return 0.0
    return _relevance_mask(ctx, c).bit_count() / size


def beta_in(c: FormalConcept, gens: MinGenSet) -> float:
    size = len(c.intent)
    if len(gens) > 1 and size > 1:
        # exact integer division, correctly rounded and free of overflow
        return len(gens) / ((1 << size) - 2)
    return 0.0


def conceptual_relevance(ctx: FormalContext, c: FormalConcept, uppers: FaceFamily,
                         activation: str | None = None) -> RelevanceScore:
    name = settings.FCA_DEFAULT_ACTIVATION if activation is None else activation
    combine = get_activation(name)

    alpha = alpha_in(ctx, c)
    gens = minimal_generators(c, uppers)
    beta = beta_in(c, gens)
    return RelevanceScore(alpha, beta, float(combine(alpha, beta)), name, len(gens))


def score_concept(lat: ConceptLattice, concept_id: int, activation: str | None = None) -> RelevanceScore:
    """CR of one lattice concept, faces included."""
    return conceptual_relevance(lat.context, lat[concept_id], face_family(lat, concept_id), activation)


def stability_bruteforce(ctx: FormalContext, c: FormalConcept, max_extent: int | None = None) -> StabilityScore:
    """Count the subsets e of A with e′ = B by enumerating all 2^|A| of them."""
    if max_extent is None:
        max_extent = settings.FCA_MAX_STABILITY_EXTENT
    objects = list(c.extent)
    size = len(objects)
    if size > max_extent:
        raise ExtentTooLargeError(
            f'extent of size {size} exceeds the brute-force stability cap of {max_extent}',
            cap=max_extent,
        )

    rows = [ctx.rows[g] for g in objects]
    everything = full_mask(ctx.n_attributes)
    intent = c.intent.bits
    count = 0
    for subset in range(1 << size):
        shared = everything
        i = 0
        while subset:
            if subset & 1:
                shared &= rows[i]
            subset >>= 1
            i += 1
        if shared == intent:
            count += 1

    exact = Fraction(count, 1 << size)
    return StabilityScore(float(exact), BRUTE_FORCE, exact)


def stability_lattice(lat: ConceptLattice, ctx: FormalContext | None = None) -> dict[int, StabilityScore]:
    """
    Exact stability of every concept from the lattice order.

    Every subset e of A closes to exactly one extent below or equal to A, so
    count(c) = 2^|A| − Σ count(d) over the concepts d strictly below c.
    Concepts are processed by ascending extent size.
    """
    if ctx is not None and ctx.attributes != lat.context.attributes:
        raise ContextMismatchError('lattice was not built from this context')

    n = len(lat)
    below = [0] * n
    counts = [0] * n
    for cid in range(n - 1, -1, -1):
        mask = 0
        for low in lat.lower[cid]:
            mask |= below[low] | 1 << low
        below[cid] = mask
        size = len(lat.concepts[cid].extent)
        counts[cid] = (1 << size) - sum(counts[d] for d in iter_indexes(mask))

    scores = {}
    for cid in range(n):
        exact = Fraction(counts[cid], 1 << len(lat.concepts[cid].extent))
        scores[cid] = StabilityScore(float(exact), LATTICE_DP, exact)
    logger.debug(f'Computed lattice stability for {n} concepts')
    return scores


def select_concepts(scores: dict[int, float], k: int | None = None,
                    threshold: float | None = None) -> list[int]:
    """Highest-scoring concept ids first, ties broken by ascending id."""
    ranked = sorted(scores, key=lambda cid: (-scores[cid], cid))
    if threshold is not None:
        ranked = [cid for cid in ranked if scores[cid] >= threshold]
    if k is not None:
        ranked = ranked[:max(k, 0)]
    return ranked


@dataclass(frozen=True, slots=True)
class ConceptScores:
    """One row of the per-concept score dump; unused indices stay None."""

    concept_id: int
    extent_size: int
    intent_size: int
    alpha: float | None = None
    beta: float | None = None
    cr: float | None = None
    stability: float | None = None
    n_mingens: int | None = None


def resolve_index(index: str | None) -> str:
    index = settings.FCA_DEFAULT_INDEX if index is None else index
    if index not in INDEX_NAMES:
        raise UnknownIndexError(f'unknown index {index!r}; choose one of {", ".join(INDEX_NAMES)}')
    return index


def resolve_stability_method(method: str | None) -> str:
    method = settings.FCA_STABILITY_METHOD if method is None else method
    if method not in STABILITY_METHODS:
        raise UnknownIndexError(f'unknown stability method {method!r}; choose one of brute, dp')
    return STABILITY_METHODS[method]


def score_lattice(lat: ConceptLattice, index: str | None = None, activation: str | None = None,
                  stability_method: str | None = None, max_extent: int | None = None,
                  threads: int | None = None) -> list[ConceptScores]:
    """
    Score every concept with one index, in canonical order.

    Concepts whose extent is above the brute-force stability cap keep an
    empty stability column.
    """
    index = resolve_index(index)
    method = resolve_stability_method(stability_method)
    activation = settings.FCA_DEFAULT_ACTIVATION if activation is None else activation
    get_activation(activation)
    if max_extent is None:
        max_extent = settings.FCA_MAX_STABILITY_EXTENT
    dp = stability_lattice(lat) if index == 'stability' and method == LATTICE_DP else None

    def score(concept: FormalConcept) -> ConceptScores:
        sizes = dict(concept_id=concept.id, extent_size=len(concept.extent), intent_size=len(concept.intent))
        if index == 'cr':
            cr = score_concept(lat, concept.id, activation)
            return ConceptScores(**sizes, alpha=cr.alpha, beta=cr.beta, cr=cr.value, n_mingens=cr.n_mingens)
        if dp is not None:
            return ConceptScores(**sizes, stability=dp[concept.id].value)
        if len(concept.extent) > max_extent:
            return ConceptScores(**sizes)
        return ConceptScores(**sizes, stability=stability_bruteforce(lat.context, concept, max_extent).value)

    with ThreadPoolExecutor(max_workers=threads or settings.FCA_THREADS) as pool:
        rows = list(pool.map(score, lat.concepts))

    skipped = sum(1 for row in rows if index == 'stability' and row.stability is None)
    if skipped:
        logger.warning(f'{skipped} concepts have extents above the stability cap of {max_extent} and were left unscored')
    logger.info(f'Scored {len(rows)} concepts with {index}')
    return rows
