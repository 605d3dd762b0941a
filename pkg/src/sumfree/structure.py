"""Structural diagnostics for sum-free sets and near-sum-free containers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .groundset import IntSet, bits, is_sum_free_mask


@dataclass(frozen=True)
class StructureClass:
    """Which of the three structural alternatives a set satisfies.

    ``alt_small``: |S| <= 2n/5 + 1. ``alt_odd``: every member is odd.
    ``alt_min``: |S| <= min(S), with min of the empty set taken as infinity.
    Every sum-free set has at least one flag set.
    """

    alt_small: bool
    alt_odd: bool
    alt_min: bool

    @property
    def any(self) -> bool:
        return self.alt_small or self.alt_odd or self.alt_min

    def to_dict(self) -> dict:
        return {"alt_small": self.alt_small, "alt_odd": self.alt_odd, "alt_min": self.alt_min}


def dfst_classify(S: IntSet, n: int | None = None) -> StructureClass:
    n = S.n if n is None else n
    size = len(S)
    lo = S.min()
    return StructureClass(
        alt_small=5 * size <= 2 * n + 5,
        alt_odd=all(x % 2 for x in S),
        alt_min=lo is None or size <= lo,
    )


@dataclass(frozen=True)
class DecompositionResult:
    B: IntSet
    C: IntSet
    removal_order: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "B": self.B.to_text(),
            "C": self.C.to_text(),
            "removal_order": [list(step) for step in self.removal_order],
        }


def _participation(mask: int) -> dict[int, int]:
    """For each member, the number of Schur triples (x <= y, x + y = z) it lies in."""
    tally = {v: 0 for v in bits(mask)}
    for x in tally:
        # y >= x with x + y in the set
        ys = (mask >> x) & mask
        ys = ys >> x << x
        for y in bits(ys):
            for v in {x, y, x + y}:
                tally[v] += 1
    return tally


def greedy_removal_decompose(A: IntSet) -> DecompositionResult:
    """Split A into a sum-free part B and a removed part C.

    Repeatedly removes the element lying in the most Schur triples of what is
    left (smallest element on ties) until the remainder is sum-free.
    """
    mask = A.mask
    order = []
    while not is_sum_free_mask(mask):
        tally = _participation(mask)
        v = min(tally, key=lambda w: (-tally[w], w))
        order.append((v, tally[v]))
        mask &= ~(1 << v)
    return DecompositionResult(IntSet(A.n, mask), IntSet(A.n, A.mask & ~mask), tuple(order))


@dataclass(frozen=True)
class CaseDiagnostic:
    gamma: Fraction
    low_part: int
    even_part: int
    epsilon: float
    case_a: bool
    case_b: bool

    def to_dict(self) -> dict:
        return {
            "gamma": str(self.gamma),
            "low_part": self.low_part,
            "even_part": self.even_part,
            "epsilon": self.epsilon,
            "case_a": self.case_a,
            "case_b": self.case_b,
        }


def container_case(A: IntSet, epsilon: float, n: int | None = None) -> CaseDiagnostic:
    """Measure how far A is from the interval case and from the odd case.

    gamma = 1/2 - |A|/n. ``low_part`` counts members of A in [1, ceil((1/2 - gamma) n)];
    ``even_part`` counts even members. Case (a) holds when low_part <= epsilon·n,
    case (b) when even_part <= epsilon·n.
    """
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    n = A.n if n is None else n
    gamma = Fraction(1, 2) - Fraction(len(A), n)
    cut = math.ceil((Fraction(1, 2) - gamma) * n)
    low = sum(1 for x in A if x <= cut)
    even = sum(1 for x in A if x % 2 == 0)
    eps = Fraction(str(epsilon))
    return CaseDiagnostic(
        gamma=gamma,
        low_part=low,
        even_part=even,
        epsilon=epsilon,
        case_a=low <= eps * n,
        case_b=even <= eps * n,
    )
