"""Fixed-width bit vectors over the object and attribute universes.

Sets are stored as plain Python integers: bit ``i`` is set when the element
with position ``i`` belongs to the set. The algorithms work on the raw
integers; ``AttrSet`` and ``ObjSet`` wrap them at the API boundary so a set
always knows the width of the universe it came from.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .exceptions import ContextMismatchError


def make_bitset(indexes: Iterable[int]) -> int:
    value = 0
    for idx in indexes:
        value |= 1 << idx
    return value


def iter_indexes(value: int) -> Iterator[int]:
    """Yield the positions of the set bits, lowest first."""
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


def full_mask(width: int) -> int:
    return (1 << width) - 1


def canonical_key(value: int) -> tuple[int, int]:
    """Order by cardinality, then by the integer value of the bit pattern."""
    return value.bit_count(), value


@dataclass(frozen=True, slots=True)
class BitSet:
    bits: int
    width: int

    def __post_init__(self):
        if self.width < 0 or self.bits < 0 or self.bits >> self.width:
            raise ContextMismatchError(
                f'bits {self.bits:#x} do not fit in a universe of width {self.width}'
            )

    @classmethod
    def from_indexes(cls, indexes: Iterable[int], width: int):
        return cls(make_bitset(indexes), width)

    @classmethod
    def empty(cls, width: int):
        return cls(0, width)

    @classmethod
    def full(cls, width: int):
        return cls(full_mask(width), width)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_indexes(self.bits)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and index >= 0 and bool(self.bits >> index & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: BitSet) -> None:
        if type(other) is not type(self) or other.width != self.width:
            raise ContextMismatchError(
                f'cannot combine {type(self).__name__}[{self.width}] '
                f'with {type(other).__name__}[{other.width}]'
            )

    def __and__(self, other: BitSet):
        self._check(other)
        return type(self)(self.bits & other.bits, self.width)

    def __or__(self, other: BitSet):
        self._check(other)
        return type(self)(self.bits | other.bits, self.width)

    def __sub__(self, other: BitSet):
        self._check(other)
        return type(self)(self.bits & ~other.bits, self.width)

    def issubset(self, other: BitSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def issuperset(self, other: BitSet) -> bool:
        return other.issubset(self)

    def add(self, index: int):
        return type(self)(self.bits | 1 << index, self.width)

    def discard(self, index: int):
        return type(self)(self.bits & ~(1 << index), self.width)

    def sort_key(self) -> tuple[int, int]:
        return canonical_key(self.bits)

    def __repr__(self) -> str:
        return f'{type(self).__name__}({sorted(self)}, width={self.width})'


class AttrSet(BitSet):
    """Subset of the attribute universe, width |M|."""

    __slots__ = ()


class ObjSet(BitSet):
    """Subset of the object universe, width |G|."""

    __slots__ = ()
