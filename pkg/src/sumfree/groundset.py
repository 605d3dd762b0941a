"""Ground interval [1..n], integer sets as bitmasks, and Schur-triple predicates.

Sets are stored as Python ints used as bit vectors: bit ``i`` is set iff ``i``
is a member. Bit 0 is never used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    return ((1 << n) - 1) << 1


def sumset_mask(mask: int) -> int:
    """Bitmask of all x + y with x, y in ``mask`` (x = y allowed)."""
    out = 0
    for x in bits(mask):
        out |= mask << x
    return out


def difference_mask(mask: int) -> int:
    """Bitmask of all positive differences y - x with x < y in ``mask``."""
    out = 0
    for x in bits(mask):
        out |= mask >> x
    return out & ~1


@dataclass(frozen=True)
class GroundInterval:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"ground interval needs n >= 1, got {self.n}")

    def full(self) -> IntSet:
        return IntSet(self.n, full_mask(self.n))

    def odds(self) -> IntSet:
        return IntSet.from_iter(self.n, range(1, self.n + 1, 2))

    def evens(self) -> IntSet:
        return IntSet.from_iter(self.n, range(2, self.n + 1, 2))

    def interval(self, p: int, q: int) -> IntSet:
        """The set [p, q] clipped to [1..n]; empty when p > q."""
        p, q = max(p, 1), min(q, self.n)
        return IntSet.from_iter(self.n, range(p, q + 1))


@dataclass(frozen=True, order=False)
class IntSet:
    """An immutable subset of [1..n] backed by an int bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"universe size must be >= 1, got {self.n}")
        if self.mask < 0 or self.mask & ~full_mask(self.n):
            raise ValueError(f"members outside [1..{self.n}]")

    @classmethod
    def from_iter(cls, n: int, elements: Iterable[int]) -> IntSet:
        elements = list(elements)
        bad = [x for x in elements if not 1 <= x <= n]
        if bad:
            raise ValueError(f"elements {bad} outside [1..{n}]")
        return cls(n, mask_of(elements))

    @classmethod
    def parse(cls, n: int, text: str) -> IntSet:
        """Parse the comma-separated text form, e.g. ``"1,3,8"``; ``""`` is empty."""
        text = text.strip()
        if not text:
            return cls(n, 0)
        return cls.from_iter(n, (int(tok) for tok in text.split(",")))

    def to_text(self) -> str:
        return ",".join(str(x) for x in self)

    def __str__(self) -> str:
        return "{" + self.to_text() + "}"

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and x >= 1 and bool(self.mask >> x & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def members(self) -> list[int]:
        return list(bits(self.mask))

    def min(self) -> int | None:
        if not self.mask:
            return None
        return (self.mask & -self.mask).bit_length() - 1

    def _check(self, other: IntSet) -> None:
        if other.n != self.n:
            raise ValueError(f"universe mismatch: {self.n} vs {other.n}")

    def __or__(self, other: IntSet) -> IntSet:
        self._check(other)
        return IntSet(self.n, self.mask | other.mask)

    def __and__(self, other: IntSet) -> IntSet:
        self._check(other)
        return IntSet(self.n, self.mask & other.mask)

    def __sub__(self, other: IntSet) -> IntSet:
        self._check(other)
        return IntSet(self.n, self.mask & ~other.mask)

    def issubset(self, other: IntSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: IntSet) -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def add(self, x: int) -> IntSet:
        return IntSet(self.n, self.mask | 1 << x)

    def sort_key(self) -> tuple[int, ...]:
        """Key for lexicographic order of the bit vector (b_1, ..., b_n)."""
        return tuple((self.mask >> i) & 1 for i in range(1, self.n + 1))


class SchurTriple(NamedTuple):
    x: int
    y: int
    z: int


def schur_triples(n: int) -> list[SchurTriple]:
    """All (x, y, x+y) with 1 <= x <= y and x + y <= n, lexicographically sorted."""
    return [
        SchurTriple(x, y, x + y)
        for x in range(1, n // 2 + 1)
        for y in range(x, n - x + 1)
    ]


def is_sum_free_mask(mask: int) -> bool:
    for x in bits(mask):
        if (mask << x) & mask:
            return False
    return True


def is_sum_free(A: IntSet) -> bool:
    return is_sum_free_mask(A.mask)


def schur_triple_count(A: IntSet) -> int:
    """Number of triples x <= y, x + y = z with x, y, z all in A."""
    count = 0
    for x in A:
        shifted = (A.mask >> x) & A.mask
        # y ranges over members >= x with x + y also in A
        count += (shifted >> x << x).bit_count()
    return count


def blocker_mask(mask: int) -> int:
    """Elements v whose addition to the sum-free set ``mask`` breaks sum-freeness.

    v is blocked if v = a + b, v + a = b, or 2v = a for some a, b in the set.
    """
    halves = 0
    for a in bits(mask):
        if a % 2 == 0:
            halves |= 1 << (a // 2)
    return sumset_mask(mask) | difference_mask(mask) | halves


def is_maximal_sum_free_mask(mask: int, n: int) -> bool:
    if not is_sum_free_mask(mask):
        return False
    outside = full_mask(n) & ~mask
    return outside & ~blocker_mask(mask) == 0


def is_maximal_sum_free(A: IntSet, n: int | None = None) -> bool:
    """True iff A is sum-free and no element of [1..n] outside A can be added."""
    n = A.n if n is None else n
    if n < A.n and A.mask & ~full_mask(n):
        raise ValueError(f"set has members outside [1..{n}]")
    return is_maximal_sum_free_mask(A.mask, n)
