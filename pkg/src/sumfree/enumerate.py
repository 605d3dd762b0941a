"""Exact counting of sum-free and maximal sum-free subsets of [1..n].

Two independent routes are provided. The oracle filters all 2^n subsets with
the predicates from :mod:`sumfree.groundset`. The backtracking engine decides
elements 1, 2, ..., n in order, keeping the current set, its sumset and its
"blocked" elements as bitmasks, so that a branch is cut as soon as an element
would close a Schur triple. In maximal mode a leaf is accepted only when every
excluded element has a blocker witness.

The search space is split at a fixed prefix depth; each subtree is explored
independently and the partial reports are merged by addition, which keeps
counts exact and identical for any worker count.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Literal, NamedTuple

from .errors import ResourceLimitError
from .groundset import (
    IntSet,
    full_mask,
    is_maximal_sum_free_mask,
    is_sum_free_mask,
)

Mode = Literal["all_sum_free", "maximal_sum_free"]

MAXIMAL_CEILING = 34
SUM_FREE_CEILING = 34
ORACLE_CEILING = 24
PREFIX_DEPTH = 8


@dataclass
class EnumerationReport:
    n: int
    mode: Mode
    count: int
    sets: list[IntSet] | None = None
    nodes_explored: int = 0
    elapsed: float = 0.0
    algorithm: str = "backtracking"
    cached: bool = False

    def to_dict(self) -> dict:
        """JSON-ready summary; ``elapsed`` is left out so output stays reproducible."""
        out = {
            "n": self.n,
            "mode": self.mode,
            "algorithm": self.algorithm,
            "count": self.count,
            "nodes_explored": self.nodes_explored,
        }
        if self.sets is not None:
            out["sets"] = [s.to_text() for s in self.sets]
        return out


class _State(NamedTuple):
    # next element to decide, members, sumset, differences and halves, members
    # mirrored around bit `2n + 2` (to shift out differences in one go)
    i: int
    members: int
    sums: int
    extra: int
    mirror: int


@dataclass
class _Partial:
    count: int = 0
    nodes: int = 0
    sets: list[int] = field(default_factory=list)


def _extend(state: _State, n: int) -> _State:
    i, members, sums, extra, mirror = state
    top = 2 * n + 2
    extra |= (mirror << i) >> top
    if i % 2 == 0:
        extra |= 1 << (i // 2)
    return _State(
        i + 1,
        members | 1 << i,
        sums | (members << i) | (1 << (2 * i)),
        extra,
        mirror | 1 << (top - i),
    )


def _skip(state: _State) -> _State:
    return state._replace(i=state.i + 1)


def _explore(n: int, root: _State, maximal: bool, emit: bool) -> _Partial:
    """Depth-first search below ``root``; excluded branch first (bit-vector lex order)."""
    out = _Partial()
    full = full_mask(n)
    top = 2 * n + 2
    sets = out.sets
    nodes = 0
    count = 0

    def rec(i: int, members: int, sums: int, extra: int, mirror: int) -> None:
        nonlocal nodes, count
        nodes += 1
        if i > n:
            if maximal and (full & ~members) & ~(sums | extra):
                return
            count += 1
            if emit:
                sets.append(members)
            return
        if maximal:
            # every excluded element below i must be blockable by a later one:
            # v is rescued only by some w >= i with w - v in the set or w = 2v
            pending = (full & ~members) & ~(sums | extra) & ((1 << i) - 1)
            if pending and not _rescuable(pending, members, i, n):
                return
        rec(i + 1, members, sums, extra, mirror)
        if not sums >> i & 1:
            e = extra | ((mirror << i) >> top)
            if not i & 1:
                e |= 1 << (i >> 1)
            rec(
                i + 1,
                members | 1 << i,
                sums | (members << i) | (1 << (i << 1)),
                e,
                mirror | 1 << (top - i),
            )

    rec(*root)
    out.nodes = nodes
    out.count = count
    return out


def _rescuable(pending: int, members: int, i: int, n: int) -> bool:
    """Whether every pending element can still be blocked by an element >= i."""
    while pending:
        low = pending & -pending
        v = low.bit_length() - 1
        pending ^= low
        if 2 * v >= i and 2 * v <= n:
            continue
        if v + i <= n:
            continue
        # w = v + a with a already a member and i <= w <= n
        window = (members << v) >> i
        if window & ((1 << (n - i + 1)) - 1):
            continue
        return False
    return True


def _prefix_states(n: int, depth: int, maximal: bool) -> tuple[list[_State], int]:
    """Expand the first ``depth`` decisions breadth-first in lex order.

    Returns the frontier states and the number of internal nodes visited.
    """
    frontier = [_State(1, 0, 0, 0, 0)]
    nodes = 0
    full = full_mask(n)
    for _ in range(min(depth, n)):
        nxt: list[_State] = []
        for st in frontier:
            nodes += 1
            if maximal:
                pending = (full & ~st.members) & ~(st.sums | st.extra) & ((1 << st.i) - 1)
                if pending and not _rescuable(pending, st.members, st.i, n):
                    continue
            nxt.append(_skip(st))
            if not st.sums >> st.i & 1:
                nxt.append(_extend(st, n))
        frontier = nxt
    return frontier, nodes


def _run_subtree(args: tuple[int, _State, bool, bool]) -> _Partial:
    n, root, maximal, emit = args
    return _explore(n, root, maximal, emit)


def _search(n: int, maximal: bool, emit: bool, workers: int, depth: int) -> _Partial:
    frontier, prefix_nodes = _prefix_states(n, depth, maximal)
    jobs = [(n, st, maximal, emit) for st in frontier]
    if workers <= 1 or len(jobs) <= 1:
        parts = map(_run_subtree, jobs)
        total = _merge(parts)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            total = _merge(pool.map(_run_subtree, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    total.nodes += prefix_nodes
    return total


def _merge(parts: Iterable[_Partial]) -> _Partial:
    # frontier order is lex order, so concatenation keeps the stream sorted
    total = _Partial()
    for p in parts:
        total.count += p.count
        total.nodes += p.nodes
        total.sets.extend(p.sets)
    return total


def _check_n(n: int, ceiling: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > ceiling:
        raise ResourceLimitError(f"n={n} exceeds enumeration ceiling {ceiling}")


def count_sum_free(
    n: int,
    emit: bool = False,
    workers: int = 1,
    ceiling: int = SUM_FREE_CEILING,
    depth: int = PREFIX_DEPTH,
) -> EnumerationReport:
    """Count f(n), the number of sum-free subsets of [1..n], empty set included."""
    _check_n(n, ceiling)
    t0 = time.perf_counter()
    part = _search(n, False, emit, workers, depth)
    return EnumerationReport(
        n=n,
        mode="all_sum_free",
        count=part.count,
        sets=[IntSet(n, m) for m in part.sets] if emit else None,
        nodes_explored=part.nodes,
        elapsed=time.perf_counter() - t0,
    )


def count_maximal_sum_free(
    n: int,
    algorithm: Literal["oracle", "backtracking"] = "backtracking",
    emit: bool = False,
    workers: int = 1,
    ceiling: int = MAXIMAL_CEILING,
    depth: int = PREFIX_DEPTH,
) -> EnumerationReport:
    """Count f_max(n), the number of maximal sum-free subsets of [1..n]."""
    if algorithm == "oracle":
        _check_n(n, min(ceiling, ORACLE_CEILING))
        t0 = time.perf_counter()
        masks = maximal_sum_free_oracle(n)
        return EnumerationReport(
            n=n,
            mode="maximal_sum_free",
            count=len(masks),
            sets=[IntSet(n, m) for m in masks] if emit else None,
            nodes_explored=1 << n,
            elapsed=time.perf_counter() - t0,
            algorithm="oracle",
        )
    if algorithm != "backtracking":
        raise ValueError(f"unknown algorithm {algorithm!r}")
    _check_n(n, ceiling)
    t0 = time.perf_counter()
    part = _search(n, True, emit, workers, depth)
    return EnumerationReport(
        n=n,
        mode="maximal_sum_free",
        count=part.count,
        sets=[IntSet(n, m) for m in part.sets] if emit else None,
        nodes_explored=part.nodes,
        elapsed=time.perf_counter() - t0,
    )


def _all_masks(n: int) -> Iterable[int]:
    # subsets in bit-vector lex order: element 1 is the most significant digit
    for code in range(1 << n):
        mask = 0
        for i in range(n):
            if code >> (n - 1 - i) & 1:
                mask |= 1 << (i + 1)
        yield mask


def sum_free_oracle(n: int) -> list[int]:
    """Every sum-free subset of [1..n] as a bitmask, by filtering all subsets."""
    _check_n(n, ORACLE_CEILING)
    return [m for m in _all_masks(n) if is_sum_free_mask(m)]


def maximal_sum_free_oracle(n: int) -> list[int]:
    """Every maximal sum-free subset of [1..n] as a bitmask, by filtering all subsets."""
    _check_n(n, ORACLE_CEILING)
    return [m for m in _all_masks(n) if is_maximal_sum_free_mask(m, n)]


class GrowthRow(NamedTuple):
    n: int
    f: int
    fmax: int
    log2fmax_over_n: float


GROWTH_HEADER = ("n", "f", "fmax", "log2fmax_over_n")


def growth_table(
    n_lo: int,
    n_hi: int,
    workers: int = 1,
    ceiling: int = MAXIMAL_CEILING,
) -> list[GrowthRow]:
    if not 1 <= n_lo <= n_hi:
        raise ValueError(f"need 1 <= n_lo <= n_hi, got {n_lo}..{n_hi}")
    if n_hi > ceiling:
        raise ResourceLimitError(f"n={n_hi} exceeds enumeration ceiling {ceiling}")
    rows = []
    for n in range(n_lo, n_hi + 1):
        f = count_sum_free(n, workers=workers, ceiling=ceiling).count
        fmax = count_maximal_sum_free(n, workers=workers, ceiling=ceiling).count
        rows.append(growth_row(n, f, fmax))
    return rows


def growth_row(n: int, f: int, fmax: int) -> GrowthRow:
    return GrowthRow(n, f, fmax, round(math.log2(fmax) / n, 6))


def growth_csv(rows: Iterable[GrowthRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(GROWTH_HEADER)
    for r in rows:
        writer.writerow([r.n, r.f, r.fmax, f"{r.log2fmax_over_n:.6f}"])
    return buf.getvalue()


def growth_json(rows: Iterable[GrowthRow]) -> str:
    return json.dumps([r._asdict() for r in rows], indent=2) + "\n"
