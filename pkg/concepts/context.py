"""
Formal context data model, derivation operators and the coin-toss generator.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence

import numpy as np

from .bitsets import AttrSet, ObjSet, full_mask, iter_indexes, make_bitset
from .exceptions import ContextFormatError, ContextMismatchError

logger = logging.getLogger(__name__)

SEED_MASK = (1 << 64) - 1


class FormalContext:
    """
    Objects, attributes and a binary incidence relation.

    ``rows[g]`` is the attribute bitmask of object ``g`` and ``columns[m]`` the
    object bitmask of attribute ``m``. Both are built once and never change.
    """

    __slots__ = ('name', 'objects', 'attributes', 'rows', 'columns')

    def __init__(self, objects: Sequence[str], attributes: Sequence[str],
                 rows: Sequence[int], name: str = ''):
        objects = tuple(objects)
        attributes = tuple(attributes)
        rows = tuple(rows)
        _check_unique(objects, 'object')
        _check_unique(attributes, 'attribute')
        if len(rows) != len(objects):
            raise ContextMismatchError(f'{len(rows)} rows for {len(objects)} objects')
        limit = 1 << len(attributes)
        for g, row in enumerate(rows):
            if row < 0 or row >= limit:
                raise ContextMismatchError(
                    f'row of object {objects[g]!r} exceeds {len(attributes)} attributes'
                )

        columns = [0] * len(attributes)
        for g, row in enumerate(rows):
            for m in iter_indexes(row):
                columns[m] |= 1 << g

        object.__setattr__(self, 'name', name)
        object.__setattr__(self, 'objects', objects)
        object.__setattr__(self, 'attributes', attributes)
        object.__setattr__(self, 'rows', rows)
        object.__setattr__(self, 'columns', tuple(columns))

    def __setattr__(self, key, value):
        raise AttributeError(f'FormalContext is immutable; cannot set {key!r}')

    @classmethod
    def from_dict(cls, incidence: Mapping[str, Iterable[str]],
                  attributes: Sequence[str] | None = None, name: str = ''):
        """
        Build a context from ``{object: attribute names}``.

        Without an explicit attribute list the attributes appear in order of
        first use.
        """
        if attributes is None:
            attributes = []
            for owned in incidence.values():
                for attr in owned:
                    if attr not in attributes:
                        attributes.append(attr)
        position = {attr: m for m, attr in enumerate(attributes)}
        rows = []
        for obj, owned in incidence.items():
            try:
                rows.append(make_bitset(position[attr] for attr in owned))
            except KeyError as exc:
                raise ContextMismatchError(f'object {obj!r} has unknown attribute {exc.args[0]!r}') from None
        return cls(list(incidence), attributes, rows, name=name)

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_objects, self.n_attributes

    def all_objects(self) -> ObjSet:
        return ObjSet.full(self.n_objects)

    def all_attributes(self) -> AttrSet:
        return AttrSet.full(self.n_attributes)

    def attrs(self, *names: str) -> AttrSet:
        return AttrSet.from_indexes((self.attributes.index(n) for n in names), self.n_attributes)

    def objs(self, *names: str) -> ObjSet:
        return ObjSet.from_indexes((self.objects.index(n) for n in names), self.n_objects)

    def attribute_names(self, attrs: AttrSet | int) -> list[str]:
        bits = attrs.bits if isinstance(attrs, AttrSet) else attrs
        return [self.attributes[m] for m in iter_indexes(bits)]

    def object_names(self, objs: ObjSet | int) -> list[str]:
        bits = objs.bits if isinstance(objs, ObjSet) else objs
        return [self.objects[g] for g in iter_indexes(bits)]

    def common_attributes(self, extent_bits: int) -> int:
        """Raw A′: the attributes shared by every object in the mask."""
        shared = full_mask(self.n_attributes)
        rows = self.rows
        for g in iter_indexes(extent_bits):
            shared &= rows[g]
            if not shared:
                break
        return shared

    def common_objects(self, intent_bits: int) -> int:
        """Raw B′: the objects having every attribute in the mask."""
        shared = full_mask(self.n_objects)
        columns = self.columns
        for m in iter_indexes(intent_bits):
            shared &= columns[m]
            if not shared:
                break
        return shared

    def subcontext(self, object_indexes: Iterable[int], name: str = '') -> FormalContext:
        """Keep the given objects, in the given order, and every attribute."""
        object_indexes = list(object_indexes)
        return FormalContext(
            [self.objects[g] for g in object_indexes],
            self.attributes,
            [self.rows[g] for g in object_indexes],
            name=name,
        )

    def __eq__(self, other):
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (self.objects, self.attributes, self.rows) == (other.objects, other.attributes, other.rows)

    def __hash__(self):
        return hash((self.objects, self.attributes, self.rows))

    def __repr__(self):
        return f'FormalContext({self.n_objects}x{self.n_attributes}{", " + self.name if self.name else ""})'


def _check_unique(names: Sequence[str], kind: str) -> None:
    seen = set()
    for name in names:
        if name in seen:
            raise ContextFormatError(f'duplicate {kind} name {name!r}')
        seen.add(name)


def _check_width(ctx: FormalContext, subset, kind, width) -> None:
    if not isinstance(subset, kind) or subset.width != width:
        raise ContextMismatchError(
            f'expected {kind.__name__}[{width}], got {subset!r}'
        )


def derive_extent(ctx: FormalContext, extent: ObjSet) -> AttrSet:
    """A′: the attributes common to every object of ``extent``; ∅′ is M."""
    _check_width(ctx, extent, ObjSet, ctx.n_objects)
    return AttrSet(ctx.common_attributes(extent.bits), ctx.n_attributes)


def derive_intent(ctx: FormalContext, intent: AttrSet) -> ObjSet:
    """B′: the objects sharing every attribute of ``intent``; ∅′ is G."""
    _check_width(ctx, intent, AttrSet, ctx.n_attributes)
    return ObjSet(ctx.common_objects(intent.bits), ctx.n_objects)


def closure_attrs(ctx: FormalContext, intent: AttrSet) -> AttrSet:
    """B′′."""
    _check_width(ctx, intent, AttrSet, ctx.n_attributes)
    return AttrSet(ctx.common_attributes(ctx.common_objects(intent.bits)), ctx.n_attributes)


def seeded_generator(seed: int) -> np.random.Generator:
    """numpy PCG64 generator; seeds are taken modulo 2**64."""
    return np.random.Generator(np.random.PCG64(seed & SEED_MASK))


def gen_cointoss(n_objects: int, n_attrs: int, p: float, seed: int) -> FormalContext:
    """
    Random context where every incidence is an independent Bernoulli(p) draw.

    Draws come from numpy's PCG64 bit generator seeded with ``seed``, one
    ``random()`` double per cell in row-major order; a cell is incident when
    its draw is below ``p``. Identical arguments give identical contexts.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f'probability must lie in [0, 1], got {p}')
    if n_objects < 0 or n_attrs < 0:
        raise ValueError('object and attribute counts must be non-negative')

    draws = seeded_generator(seed).random((n_objects, n_attrs)) < p
    rows = [make_bitset(np.flatnonzero(row).tolist()) for row in draws]
    logger.debug(f'Generated coin-toss context {n_objects}x{n_attrs} p={p} seed={seed}')
    return FormalContext(
        [f'g{i + 1}' for i in range(n_objects)],
        [f'm{j + 1}' for j in range(n_attrs)],
        rows,
        name='cointoss',
    )
