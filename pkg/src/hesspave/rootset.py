"""Dense membership sets over an indexed root list, backed by a Python int."""

from __future__ import annotations

from typing import Iterable, Iterator


class RootSet:
    """Immutable bitset of root indices.

    ``size`` is the number of roots of the ambient system; bit ``k`` is set
    when root ``k`` is a member.  Set algebra uses the usual operators.
    """

    __slots__ = ("size", "bits")

    def __init__(self, size: int, bits: int = 0):
        if bits >> size:
            raise ValueError("RootSet has bits beyond the root count")
        self.size = size
        self.bits = bits

    @classmethod
    def from_indices(cls, size: int, indices: Iterable[int]) -> "RootSet":
        bits = 0
        for k in indices:
            bits |= 1 << k
        return cls(size, bits)

    def _other(self, other: "RootSet") -> int:
        if not isinstance(other, RootSet):
            return NotImplemented
        if other.size != self.size:
            raise ValueError(f"RootSet size mismatch: {self.size} vs {other.size}")
        return other.bits

    def __and__(self, other):
        return RootSet(self.size, self.bits & self._other(other))

    def __or__(self, other):
        return RootSet(self.size, self.bits | self._other(other))

    def __sub__(self, other):
        return RootSet(self.size, self.bits & ~self._other(other))

    def __xor__(self, other):
        return RootSet(self.size, self.bits ^ self._other(other))

    def __le__(self, other):
        return self.bits & ~self._other(other) == 0

    def __ge__(self, other):
        return other <= self

    def issubset(self, other: "RootSet") -> bool:
        return self <= other

    def isdisjoint(self, other: "RootSet") -> bool:
        return self.bits & self._other(other) == 0

    def __eq__(self, other):
        if not isinstance(other, RootSet):
            return NotImplemented
        return self.size == other.size and self.bits == other.bits

    def __hash__(self):
        return hash((self.size, self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, k: int) -> bool:
        return (self.bits >> k) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def indices(self) -> list[int]:
        return list(self)

    def map(self, perm) -> "RootSet":
        """Image under a permutation of root indices."""
        bits = 0
        for k in self:
            bits |= 1 << perm[k]
        return RootSet(self.size, bits)

    def __repr__(self):
        return f"RootSet({self.indices()})"
