"""The two explicit families of sum-free sets giving 2^{n/4}-type lower bounds.

``ce_family``: with m the largest even number <= n, take m together with one
member of each pair {x, m - x}, x odd and x < m/2.

``quarter_family``: for 4 | n, take n/4, a subset S of I2 = [3n/4 + 1, n],
and x - n/4 for every x in I2 outside S.

Both are lazy and indexed by a chooser integer, so member i can be built on
its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .groundset import IntSet, blocker_mask, is_sum_free_mask


@dataclass(frozen=True)
class CEFamilySpec:
    n: int
    m: int
    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def for_n(cls, n: int) -> CEFamilySpec:
        if n < 4:
            raise ValueError(f"ce family needs n >= 4, got {n}")
        m = n if n % 2 == 0 else n - 1
        pairs = tuple((x, m - x) for x in range(1, m, 2) if 2 * x < m)
        return cls(n, m, pairs)

    def __len__(self) -> int:
        return 1 << len(self.pairs)

    def member(self, chooser: int) -> IntSet:
        """Bit j of ``chooser`` picks the larger element of pair j."""
        mask = 1 << self.m
        for j, (small, large) in enumerate(self.pairs):
            mask |= 1 << (large if chooser >> j & 1 else small)
        return IntSet(self.n, mask)


@dataclass(frozen=True)
class QuarterFamilySpec:
    n: int

    def __post_init__(self) -> None:
        if self.n < 4 or self.n % 4:
            raise ValueError(f"quarter family needs n divisible by 4, got {self.n}")

    @property
    def quarter(self) -> int:
        return self.n // 4

    @property
    def I1(self) -> range:
        return range(self.n // 2 + 1, 3 * self.n // 4 + 1)

    @property
    def I2(self) -> range:
        return range(3 * self.n // 4 + 1, self.n + 1)

    def __len__(self) -> int:
        return 1 << len(self.I2)

    def member(self, chooser: int) -> IntSet:
        """Bit j of ``chooser`` puts the j-th element of I2 into the chosen subset."""
        q = self.quarter
        mask = 1 << q
        for j, x in enumerate(self.I2):
            mask |= 1 << (x if chooser >> j & 1 else x - q)
        return IntSet(self.n, mask)

    def chosen(self, chooser: int) -> list[int]:
        return [x for j, x in enumerate(self.I2) if chooser >> j & 1]


def ce_family(n: int) -> Iterator[IntSet]:
    spec = CEFamilySpec.for_n(n)
    return (spec.member(i) for i in range(len(spec)))


def quarter_family(n: int) -> Iterator[IntSet]:
    spec = QuarterFamilySpec(n)
    return (spec.member(i) for i in range(len(spec)))


def complete_to_maximal(S: IntSet, n: int | None = None) -> IntSet:
    """Greedily add 1, 2, ..., n to S whenever the set stays sum-free."""
    n = S.n if n is None else n
    if not is_sum_free_mask(S.mask):
        raise ValueError(f"{S} is not sum-free")
    mask = S.mask
    for v in range(1, n + 1):
        if mask >> v & 1:
            continue
        if not blocker_mask(mask) >> v & 1:
            mask |= 1 << v
    return IntSet(n, mask)


def distinct_maximal_count(family: Iterable[IntSet], n: int | None = None) -> int:
    seen = set()
    for S in family:
        seen.add(complete_to_maximal(S, n).mask)
    return len(seen)


def non_extendable(S: IntSet, candidates: Iterable[int]) -> list[int]:
    """Candidates outside S whose addition would keep S sum-free (should be empty)."""
    blocked = blocker_mask(S.mask)
    return [y for y in candidates if not S.mask >> y & 1 and not blocked >> y & 1]


def family_text(kind: str, n: int) -> Iterator[str]:
    """Header line then one member per line in the comma-separated set format."""
    members = ce_family(n) if kind == "ce" else quarter_family(n)
    spec_len = len(CEFamilySpec.for_n(n)) if kind == "ce" else len(QuarterFamilySpec(n))
    yield f"# family={kind} n={n} size={spec_len}"
    for S in members:
        yield S.to_text()

