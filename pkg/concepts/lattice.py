"""
Concept enumeration, cover relation and intentional faces.

Concepts are enumerated with Close-by-One over the attribute positions.
The resulting lattice is always returned in canonical order: extent size
descending, then extent bit pattern ascending. Concept ids are positions in
that order, so the top concept has id 0.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass

from django.conf import settings

from .bitsets import AttrSet, ObjSet, canonical_key, full_mask, iter_indexes
from .context import FormalContext
from .exceptions import (
    NotAnUpperCoverError,
    OracleTooLarge,
    ResourceCapExceeded,
    UnknownConceptError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class FormalConcept:
    id: int
    extent: ObjSet
    intent: AttrSet


class ConceptLattice:
    """
    All concepts of a context with their cover relation.

    ``upper[i]`` and ``lower[i]`` list the ids of the upper and lower covers of
    concept ``i`` in ascending id order. Instances are never mutated after
    ``build_lattice`` returns them.
    """

    __slots__ = ('context', 'concepts', 'upper', 'lower', '_by_intent')

    def __init__(self, context: FormalContext, concepts, upper, lower):
        self.context = context
        self.concepts = tuple(concepts)
        self.upper = tuple(tuple(ids) for ids in upper)
        self.lower = tuple(tuple(ids) for ids in lower)
        self._by_intent = {c.intent.bits: c.id for c in self.concepts}

    def __len__(self):
        return len(self.concepts)

    def __iter__(self):
        return iter(self.concepts)

    def __getitem__(self, concept_id: int) -> FormalConcept:
        if not isinstance(concept_id, int) or not 0 <= concept_id < len(self.concepts):
            raise UnknownConceptError(f'no concept with id {concept_id!r} in a lattice of {len(self)}')
        return self.concepts[concept_id]

    @property
    def top(self) -> FormalConcept:
        return self.concepts[0]

    @property
    def bottom(self) -> FormalConcept:
        return self.concepts[-1]

    def find_intent(self, intent_bits: int) -> int | None:
        """Id of the concept with this intent mask, if there is one."""
        return self._by_intent.get(intent_bits)


def _close_by_one(ctx: FormalContext, max_concepts: int) -> list[tuple[int, int]]:
    columns = ctx.columns
    n_attrs = ctx.n_attributes
    top_extent = full_mask(ctx.n_objects)
    top_intent = ctx.common_attributes(top_extent)

    found = [(top_extent, top_intent)]
    stack = [(top_extent, top_intent, 0)]
    while stack:
        extent, intent, start = stack.pop()
        for j in range(start, n_attrs):
            bit = 1 << j
            if intent & bit:
                continue
            new_extent = extent & columns[j]
            new_intent = ctx.common_attributes(new_extent)
            # canonicity: no attribute before j may enter the closure
            lower = bit - 1
            if new_intent & lower != intent & lower:
                continue
            found.append((new_extent, new_intent))
            if len(found) > max_concepts:
                raise ResourceCapExceeded(
                    f'lattice exceeds the cap of {max_concepts} concepts', cap=max_concepts
                )
            stack.append((new_extent, new_intent, j + 1))
    return found


def _pairwise_covers(extents: list[int]) -> list[list[int]]:
    # ids are sorted by extent size descending, so walking down from i - 1
    # visits supersets in ascending size
    upper = []
    for i, extent in enumerate(extents):
        covers = []
        for j in range(i - 1, -1, -1):
            candidate = extents[j]
            if extent & ~candidate or extent == candidate:
                continue
            if any(extents[k] & ~candidate == 0 for k in covers):
                continue
            covers.append(j)
        upper.append(sorted(covers))
    return upper


def _neighbour_covers(ctx: FormalContext, pairs: list[tuple[int, int]],
                      id_by_intent: dict[int, int]) -> list[list[int]]:
    # an intent B & g′ is an upper cover iff its new objects are exactly the
    # objects that generated it
    rows = ctx.rows
    everyone = full_mask(ctx.n_objects)
    upper = []
    for extent, intent in pairs:
        generated = defaultdict(int)
        for g in iter_indexes(everyone & ~extent):
            generated[intent & rows[g]] |= 1 << g
        covers = []
        for candidate, objects in generated.items():
            if ctx.common_objects(candidate) & ~extent == objects:
                covers.append(id_by_intent[candidate])
        upper.append(sorted(covers))
    return upper


def build_lattice(ctx: FormalContext, max_concepts: int | None = None,
                  pairwise_limit: int | None = None) -> ConceptLattice:
    """Enumerate every concept of ``ctx`` and compute the cover relation."""
    if max_concepts is None:
        max_concepts = settings.FCA_MAX_CONCEPTS
    if pairwise_limit is None:
        pairwise_limit = settings.FCA_COVER_PAIRWISE_LIMIT

    pairs = _close_by_one(ctx, max_concepts)
    pairs.sort(key=lambda pair: (-pair[0].bit_count(), pair[0]))

    if len(pairs) <= pairwise_limit:
        upper = _pairwise_covers([extent for extent, _ in pairs])
        method = 'pairwise'
    else:
        id_by_intent = {intent: i for i, (_, intent) in enumerate(pairs)}
        upper = _neighbour_covers(ctx, pairs, id_by_intent)
        method = 'neighbour'

    lower = [[] for _ in pairs]
    for i, covers in enumerate(upper):
        for j in covers:
            lower[j].append(i)

    concepts = [
        FormalConcept(i, ObjSet(extent, ctx.n_objects), AttrSet(intent, ctx.n_attributes))
        for i, (extent, intent) in enumerate(pairs)
    ]
    logger.info(
        f'Built lattice of {len(concepts)} concepts for a {ctx.n_objects}x{ctx.n_attributes} '
        f'context ({method} covers)'
    )
    return ConceptLattice(ctx, concepts, upper, lower)


def upper_covers(lat: ConceptLattice, concept_id: int) -> list[int]:
    return list(lat.upper[lat[concept_id].id])


def lower_covers(lat: ConceptLattice, concept_id: int) -> list[int]:
    return list(lat.lower[lat[concept_id].id])


def intentional_face(c: FormalConcept, cu: FormalConcept, lattice: ConceptLattice) -> AttrSet:
    """B \\ B_u for an upper cover ``cu`` of ``c`` in ``lattice``."""
    if lattice[c.id] != c or lattice[cu.id] != cu or cu.id not in lattice.upper[c.id]:
        raise NotAnUpperCoverError(f'concept {cu.id} is not an upper cover of concept {c.id}')
    return c.intent - cu.intent


def brute_force_concepts(ctx: FormalContext, max_attributes: int | None = None) -> set[tuple[ObjSet, AttrSet]]:
    """Close every attribute subset; ground truth for ``build_lattice``."""
    if max_attributes is None:
        max_attributes = settings.FCA_ORACLE_MAX_ATTRIBUTES
    if ctx.n_attributes > max_attributes:
        raise OracleTooLarge(
            f'{ctx.n_attributes} attributes exceed the oracle limit of {max_attributes}'
        )
    found = set()
    for subset in range(1 << ctx.n_attributes):
        extent = ctx.common_objects(subset)
        found.add((extent, ctx.common_attributes(extent)))
    return {
        (ObjSet(extent, ctx.n_objects), AttrSet(intent, ctx.n_attributes))
        for extent, intent in found
    }


def lattice_to_json(lat: ConceptLattice) -> list[dict]:
    ctx = lat.context
    return [
        {
            'id': c.id,
            'extent': ctx.object_names(c.extent),
            'intent': ctx.attribute_names(c.intent),
            'upper': list(lat.upper[c.id]),
        }
        for c in lat.concepts
    ]


def intent_order(lat: ConceptLattice) -> list[int]:
    """Concept ids ordered by intent cardinality, then intent bit pattern."""
    return sorted(range(len(lat)), key=lambda i: canonical_key(lat.concepts[i].intent.bits))
