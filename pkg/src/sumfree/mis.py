"""Maximal independent sets in graphs that may carry loops.

A loop adds 2 to the degree of its vertex and bars the vertex from every
independent set. Looped vertices do not block their neighbours, so
``MIS(G)`` equals ``MIS`` of the graph with looped vertices deleted.

Bound checks compare exact integers: ``MIS <= 3^{n/3}`` is tested as
``MIS^3 <= 3^n`` and ``MIS <= 2^{m/2}`` as ``MIS^2 <= 2^m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import ResourceLimitError

VERTEX_CEILING = 64


@dataclass(frozen=True)
class LoopedGraph:
    vertices: tuple[int, ...]
    adj: Mapping[int, frozenset[int]]
    loops: frozenset[int] = frozenset()

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int]] = (),
        loops: Iterable[int] = (),
    ) -> LoopedGraph:
        verts = tuple(sorted(set(vertices)))
        vset = set(verts)
        nbrs: dict[int, set[int]] = {v: set() for v in verts}
        for u, v in edges:
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            if u == v:
                raise ValueError(f"self-edge ({u}, {v}); use the loops argument")
            nbrs[u].add(v)
            nbrs[v].add(u)
        loop_set = frozenset(loops)
        if not loop_set <= vset:
            raise ValueError("loop on a vertex outside the vertex set")
        return cls(verts, {v: frozenset(s) for v, s in nbrs.items()}, loop_set)

    def __len__(self) -> int:
        return len(self.vertices)

    def degree(self, v: int) -> int:
        return len(self.adj[v]) + 2 * (v in self.loops)

    def min_degree(self) -> int:
        return min((self.degree(v) for v in self.vertices), default=0)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices for v in sorted(self.adj[u]) if u < v]

    def induced(self, keep: Iterable[int]) -> LoopedGraph:
        keep_set = set(keep) & set(self.vertices)
        return LoopedGraph(
            tuple(v for v in self.vertices if v in keep_set),
            {v: self.adj[v] & keep_set for v in keep_set},
            self.loops & keep_set,
        )

    def without(self, remove: Iterable[int]) -> LoopedGraph:
        return self.induced(set(self.vertices) - set(remove))

    def triangles(self) -> Iterator[tuple[int, int, int]]:
        """Vertex triples x < y < z spanning three edges; loops play no part."""
        for x in self.vertices:
            later = sorted(w for w in self.adj[x] if w > x)
            for i, y in enumerate(later):
                for z in later[i + 1:]:
                    if z in self.adj[y]:
                        yield (x, y, z)

    def is_triangle_free(self) -> bool:
        return next(self.triangles(), None) is None

    def is_independent(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        if s & self.loops:
            return False
        return all(not (self.adj[v] & s) for v in s)

    def is_maximal_independent(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        if not s <= set(self.vertices) or not self.is_independent(s):
            return False
        for v in self.vertices:
            if v not in s and v not in self.loops and not (self.adj[v] & s):
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges()],
            "loops": sorted(self.loops),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> LoopedGraph:
        return cls.from_edges(
            data["vertices"], [tuple(e) for e in data["edges"]], data.get("loops", ())
        )


def _index_masks(G: LoopedGraph) -> tuple[list[int], list[int]]:
    """Neighbour bitmasks over vertex positions in ``G.vertices``."""
    pos = {v: i for i, v in enumerate(G.vertices)}
    nbr = [0] * len(G.vertices)
    for v, i in pos.items():
        m = 0
        for w in G.adj[v]:
            m |= 1 << pos[w]
        nbr[i] = m
    return list(G.vertices), nbr


def enumerate_mis(
    G: LoopedGraph, emit: bool = False, ceiling: int = VERTEX_CEILING
) -> tuple[int, list[frozenset[int]] | None]:
    """Count (and optionally list) the maximal independent sets of ``G``.

    Branch-and-bound over candidate/excluded bitmasks. At each node a pivot u
    is taken among undecided vertices so that ``P ∩ N[u]`` is smallest; every
    maximal extension contains a vertex of that set, so only those branch.
    Listed sets are sorted by their ascending label tuples.
    """
    if len(G) > ceiling:
        raise ResourceLimitError(f"{len(G)} vertices exceeds MIS ceiling {ceiling}")
    labels, nbr = _index_masks(G)
    looped = 0
    for i, v in enumerate(labels):
        if v in G.loops:
            looped |= 1 << i
    closed = [nbr[i] | 1 << i for i in range(len(labels))]
    count = 0
    found: list[int] = []

    def rec(R: int, P: int, X: int) -> None:
        nonlocal count
        if not P:
            if not X:
                count += 1
                if emit:
                    found.append(R)
            return
        best = -1
        best_size = len(labels) + 1
        rest = P | X
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            size = (P & closed[u]).bit_count()
            if size < best_size:
                best, best_size = u, size
        branch = P & closed[best]
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            branch ^= low
            keep = ~closed[v]
            rec(R | low, P & keep, X & keep)
            P &= ~low
            X |= low

    rec(0, ((1 << len(labels)) - 1) & ~looped, 0)
    if not emit:
        return count, None
    sets = [frozenset(labels[i] for i in range(len(labels)) if R >> i & 1) for R in found]
    sets.sort(key=lambda s: tuple(sorted(s)))
    return count, sets


def mis_bruteforce(G: LoopedGraph) -> int:
    """Count maximal independent sets by testing every vertex subset."""
    verts = G.vertices
    total = 0
    for r in range(len(verts) + 1):
        for combo in combinations(verts, r):
            if G.is_maximal_independent(combo):
                total += 1
    return total


def external_neighborhood(G: LoopedGraph, T: Iterable[int]) -> frozenset[int]:
    t = set(T)
    if not t <= set(G.vertices):
        raise ValueError("T must be a subset of the vertex set")
    out: set[int] = set()
    for u in t:
        out |= G.adj[u]
    return frozenset(out - t)


def triangle_hitting_set(G: LoopedGraph) -> frozenset[int]:
    """Greedy T with G minus T triangle-free: drop the vertex in most triangles.

    Ties go to the smallest label. No minimality is promised.
    """
    remaining = list(G.triangles())
    T: set[int] = set()
    while remaining:
        tally: dict[int, int] = {}
        for tri in remaining:
            for v in tri:
                tally[v] = tally.get(v, 0) + 1
        v = min(tally, key=lambda w: (-tally[w], w))
        T.add(v)
        remaining = [tri for tri in remaining if v not in tri]
    return frozenset(T)


@dataclass
class BoundReport:
    """MIS count against the three extremal bounds.

    Bounds are stored as log2 values; the ``*_bound`` properties give the bound
    itself as a float. The pass/fail flags come from exact integer comparisons.
    """

    vertex_count: int
    mis_count: int
    moon_moser_log2: float
    moon_moser_ok: bool
    moon_moser_equal: bool
    triangle_free: bool
    hujter_tuza_log2: float | None
    hujter_tuza_ok: bool | None
    hujter_tuza_equal: bool | None
    hitting_set_T: frozenset[int]
    lemma6_log2: float
    lemma6_ok: bool
    all_satisfied: bool = field(init=False)

    def __post_init__(self) -> None:
        self.all_satisfied = (
            self.moon_moser_ok and self.hujter_tuza_ok is not False and self.lemma6_ok
        )

    @property
    def moon_moser_bound(self) -> float:
        return 2.0**self.moon_moser_log2

    @property
    def hujter_tuza_bound(self) -> float | None:
        return None if self.hujter_tuza_log2 is None else 2.0**self.hujter_tuza_log2

    @property
    def lemma6_bound(self) -> float:
        return 2.0**self.lemma6_log2

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "mis_count": self.mis_count,
            "moon_moser_bound": self.moon_moser_bound,
            "moon_moser_log2": self.moon_moser_log2,
            "moon_moser_ok": self.moon_moser_ok,
            "moon_moser_equal": self.moon_moser_equal,
            "triangle_free": self.triangle_free,
            "hujter_tuza_bound": self.hujter_tuza_bound,
            "hujter_tuza_log2": self.hujter_tuza_log2,
            "hujter_tuza_ok": self.hujter_tuza_ok,
            "hujter_tuza_equal": self.hujter_tuza_equal,
            "hitting_set_T": sorted(self.hitting_set_T),
            "lemma6_bound": self.lemma6_bound,
            "lemma6_log2": self.lemma6_log2,
            "lemma6_ok": self.lemma6_ok,
            "all_satisfied": self.all_satisfied,
        }


def extremal_bound_report(G: LoopedGraph, ceiling: int = VERTEX_CEILING) -> BoundReport:
    count, _ = enumerate_mis(G, ceiling=ceiling)
    n = len(G)
    tri_free = G.is_triangle_free()
    T = triangle_hitting_set(G)
    if tri_free:
        ht_log2: float | None = n / 2
        ht_ok: bool | None = count**2 <= 2**n
        ht_eq: bool | None = count**2 == 2**n
    else:
        ht_log2 = ht_ok = ht_eq = None
    return BoundReport(
        vertex_count=n,
        mis_count=count,
        moon_moser_log2=n / 3 * math.log2(3),
        moon_moser_ok=count**3 <= 3**n,
        moon_moser_equal=count**3 == 3**n,
        triangle_free=tri_free,
        hujter_tuza_log2=ht_log2,
        hujter_tuza_ok=ht_ok,
        hujter_tuza_equal=ht_eq,
        hitting_set_T=T,
        lemma6_log2=(n + len(T)) / 2,
        lemma6_ok=count**2 <= 2 ** (n + len(T)),
    )


@dataclass
class PeelingTranscript:
    """Record of one run of the high-degree peeling process.

    ``b`` is the square root of the minimum degree; threshold tests are done on
    squares against ``min_degree`` so no float enters a comparison.
    """

    vertex_count: int
    min_degree: int
    max_degree: int
    b: float
    picks: list[tuple[int, tuple[int, ...]]]
    U: frozenset[int]
    Z: frozenset[int]
    I: frozenset[int]
    z_bound: float
    steps_bound: float
    picks_ok: bool = False
    cover_ok: bool = False
    maximal_in_Z_ok: bool = False
    z_bound_ok: bool = False

    @property
    def certified(self) -> bool:
        return self.picks_ok and self.cover_ok and self.maximal_in_Z_ok and self.z_bound_ok

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "b": self.b,
            "picks": [[v, list(removed)] for v, removed in self.picks],
            "U": sorted(self.U),
            "Z": sorted(self.Z),
            "I": sorted(self.I),
            "z_bound": self.z_bound,
            "steps_bound": self.steps_bound,
            "picks_ok": self.picks_ok,
            "cover_ok": self.cover_ok,
            "maximal_in_Z_ok": self.maximal_in_Z_ok,
            "z_bound_ok": self.z_bound_ok,
            "certified": self.certified,
        }


def _degree_within(G: LoopedGraph, v: int, within: set[int]) -> int:
    return len(G.adj[v] & within) + 2 * (v in G.loops)


def sapozhenko_peel(G: LoopedGraph, I: Iterable[int]) -> PeelingTranscript:
    """Peel high-degree members of the maximal independent set ``I``.

    With b = sqrt(min degree), repeatedly take the smallest-label v in I still
    present whose degree in the remaining graph is at least b, and delete v with
    its neighbours. What is left is U; Z collects vertices of U with degree
    below b inside U. The transcript checks that there were at most n/b picks,
    that I ∩ U lies in Z and is maximal independent in G[Z], and that
    |Z| <= Δ·n / (δ + Δ - b).
    """
    I = frozenset(I)
    if not G.is_maximal_independent(I):
        raise ValueError("I is not a maximal independent set of G")
    delta, Delta, n = G.min_degree(), G.max_degree(), len(G)
    if delta < 1:
        raise ValueError("peeling needs minimum degree >= 1")

    alive = set(G.vertices)
    picks: list[tuple[int, tuple[int, ...]]] = []
    while True:
        eligible = [v for v in sorted(I & alive) if _degree_within(G, v, alive) ** 2 >= delta]
        if not eligible:
            break
        v = eligible[0]
        removed = tuple(sorted(G.adj[v] & alive))
        picks.append((v, removed))
        alive -= {v, *removed}

    U = frozenset(alive)
    Z = frozenset(v for v in U if _degree_within(G, v, alive) ** 2 < delta)
    b = math.sqrt(delta)
    left = I & U
    j, z = len(picks), len(Z)
    # |Z| (δ + Δ - b) <= Δ n  <=>  |Z|(δ + Δ) - Δ n <= |Z| b
    slack = z * (delta + Delta) - Delta * n
    return PeelingTranscript(
        vertex_count=n,
        min_degree=delta,
        max_degree=Delta,
        b=b,
        picks=picks,
        U=U,
        Z=Z,
        I=I,
        z_bound=Delta * n / (delta + Delta - b),
        steps_bound=n / b,
        picks_ok=j * j * delta <= n * n,
        cover_ok=left <= Z,
        maximal_in_Z_ok=G.induced(Z).is_maximal_independent(left),
        z_bound_ok=slack <= 0 or slack * slack <= z * z * delta,
    )
