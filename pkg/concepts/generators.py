"""
Minimal generators of concept intents.

A subset h of the intent B generates B exactly when it is not contained in
the intent of any upper cover, that is when it meets every intentional face.
The minimal generators are therefore the minimal transversals of the face
family, computed here with Berge's incremental algorithm.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from django.conf import settings

from .bitsets import AttrSet, canonical_key, iter_indexes, make_bitset
from .context import FormalContext
from .exceptions import ContextMismatchError, NotASubsetError, OracleTooLarge
from .lattice import ConceptLattice, FormalConcept, intentional_face

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class FaceFamily:
    concept_id: int
    faces: tuple[AttrSet, ...]

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)


@dataclass(frozen=True, slots=True)
class MinGenSet:
    gens: tuple[AttrSet, ...]

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def common(self) -> int:
        """Raw mask of the attributes shared by every generator."""
        shared = ~0
        for gen in self.gens:
            shared &= gen.bits
        return shared if self.gens else 0


def face_family(lat: ConceptLattice, concept_id: int) -> FaceFamily:
    concept = lat[concept_id]
    faces = tuple(intentional_face(concept, lat.concepts[u], lat) for u in lat.upper[concept_id])
    return FaceFamily(concept_id, faces)


def _minimal(sets) -> list[int]:
    kept = []
    for candidate in sorted(set(sets), key=canonical_key):
        if not any(k & candidate == k for k in kept):
            kept.append(candidate)
    return kept


def minimal_transversals(faces: list[int]) -> list[int]:
    """Inclusion-minimal masks meeting every face, in canonical order."""
    transversals = [0]
    for face in faces:
        missed = [t for t in transversals if not t & face]
        if not missed:
            continue
        candidates = [t for t in transversals if t & face]
        bits = [1 << m for m in iter_indexes(face)]
        candidates.extend(t | bit for t in missed for bit in bits)
        transversals = _minimal(candidates)
    return sorted(transversals, key=canonical_key)


def minimal_generators(c: FormalConcept, faces: FaceFamily) -> MinGenSet:
    """
    The minimal generators of ``c``'s intent.

    The top concept has no faces and gets the single generator ∅.
    """
    if faces.concept_id != c.id:
        raise ContextMismatchError(f'faces of concept {faces.concept_id} given for concept {c.id}')
    width = c.intent.width
    for face in faces:
        if face.width != width or face.bits & ~c.intent.bits:
            raise ContextMismatchError(f'face {face!r} is not a subset of the intent of concept {c.id}')

    gens = minimal_transversals([face.bits for face in faces])
    return MinGenSet(tuple(AttrSet(gen, width) for gen in gens))


def brute_force_mingen(ctx: FormalContext, c: FormalConcept, max_intent: int | None = None) -> MinGenSet:
    """Definition-level oracle: every subset of B by size, kept when it closes to B."""
    if max_intent is None:
        max_intent = settings.FCA_ORACLE_MAX_INTENT
    attrs = list(c.intent)
    if len(attrs) > max_intent:
        raise OracleTooLarge(f'intent of size {len(attrs)} exceeds the oracle limit of {max_intent}')

    target = c.intent.bits
    kept = []
    for size in range(len(attrs) + 1):
        for combo in itertools.combinations(attrs, size):
            h = make_bitset(combo)
            if any(k & h == k for k in kept):
                continue
            if ctx.common_attributes(ctx.common_objects(h)) == target:
                kept.append(h)
    return MinGenSet(tuple(AttrSet(h, ctx.n_attributes) for h in sorted(kept, key=canonical_key)))


def is_generator(ctx: FormalContext, h: AttrSet, intent: AttrSet) -> bool:
    if not h.issubset(intent):
        raise NotASubsetError(f'{h!r} is not contained in {intent!r}')
    return ctx.common_attributes(ctx.common_objects(h.bits)) == intent.bits
