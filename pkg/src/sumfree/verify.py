"""Named, seeded verification suites.

Every suite returns a :class:`SuiteResult` made of individual checks. A failing
check keeps the first counterexample found, serialized so the instance can be
replayed.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Callable

from .constructions import non_extendable
from .enumerate import count_maximal_sum_free, count_sum_free
from .groundset import IntSet, is_sum_free_mask, schur_triple_count
from .linkgraph import (
    build_link_graph,
    color_edges,
    degree_profile,
    forced_triangles,
    link_masks,
    list_triangles,
)
from .mis import (
    LoopedGraph,
    enumerate_mis,
    extremal_bound_report,
    sapozhenko_peel,
    triangle_hitting_set,
)
from .structure import dfst_classify, greedy_removal_decompose

DEFAULT_SEED = 20140101


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    failures: int = 0
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, witness: Callable[[], dict]) -> None:
        self.instances += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = witness()

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.instances - self.failures}/{self.instances}"
        if self.counterexample is not None:
            text += " counterexample=" + json.dumps(self.counterexample, sort_keys=True)
        return text


@dataclass
class SuiteResult:
    suite: str
    params: dict
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        c = CheckResult(name)
        self.checks.append(c)
        return c

    def lines(self) -> list[str]:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        out = [f"# suite={self.suite} {params}"]
        out.extend(c.line() for c in self.checks)
        out.append(f"# result={'PASS' if self.passed else 'FAIL'}")
        return out


# -- random instance generators ---------------------------------------------


def random_sum_free(rng: random.Random, pool: list[int], n: int, target: int) -> IntSet:
    """Greedy sum-free subset of ``pool`` built in random order, up to ``target`` members."""
    order = pool[:]
    rng.shuffle(order)
    mask = 0
    for x in order:
        if (mask | 1 << x).bit_count() > target:
            break
        if is_sum_free_mask(mask | 1 << x):
            mask |= 1 << x
    return IntSet(n, mask)


def random_looped_graph(rng: random.Random, size: int, loops: bool = True) -> LoopedGraph:
    p = rng.uniform(0.05, 0.9)
    q = rng.uniform(0.0, 0.25) if loops else 0.0
    verts = range(1, size + 1)
    edges = [(u, v) for u, v in combinations(verts, 2) if rng.random() < p]
    looped = [v for v in verts if rng.random() < q]
    return LoopedGraph.from_edges(verts, edges, looped)


def random_triangle_free_graph(rng: random.Random, size: int) -> LoopedGraph:
    verts = list(range(1, size + 1))
    pairs = list(combinations(verts, 2))
    rng.shuffle(pairs)
    budget = rng.randint(0, len(pairs))
    nbr: dict[int, set[int]] = {v: set() for v in verts}
    edges = []
    for u, v in pairs[:budget]:
        if nbr[u] & nbr[v]:
            continue
        nbr[u].add(v)
        nbr[v].add(u)
        edges.append((u, v))
    q = rng.uniform(0.0, 0.15)
    return LoopedGraph.from_edges(verts, edges, [v for v in verts if rng.random() < q])


def disjoint_triangles(k: int) -> LoopedGraph:
    edges = []
    for t in range(k):
        a, b, c = 3 * t + 1, 3 * t + 2, 3 * t + 3
        edges += [(a, b), (b, c), (a, c)]
    return LoopedGraph.from_edges(range(1, 3 * k + 1), edges)


def perfect_matching(k: int) -> LoopedGraph:
    return LoopedGraph.from_edges(range(1, 2 * k + 1), [(2 * t + 1, 2 * t + 2) for t in range(k)])


def is_disjoint_triangles(G: LoopedGraph) -> bool:
    if G.loops or len(G) == 0 or len(G) % 3:
        return False
    for v in G.vertices:
        if len(G.adj[v]) != 2:
            return False
        a, b = G.adj[v]
        if b not in G.adj[a]:
            return False
    return True


def is_perfect_matching(G: LoopedGraph) -> bool:
    return not G.loops and len(G) > 0 and all(len(G.adj[v]) == 1 for v in G.vertices)


def _min_degree_one(rng: random.Random, G: LoopedGraph) -> LoopedGraph:
    edges = set(G.edges())
    loops = set(G.loops)
    verts = list(G.vertices)
    for v in verts:
        if not G.adj[v] and v not in loops:
            others = [w for w in verts if w != v]
            if others and rng.random() < 0.8:
                w = rng.choice(others)
                edges.add((min(v, w), max(v, w)))
            else:
                loops.add(v)
    return LoopedGraph.from_edges(verts, edges, loops)


def _pair_witness(n: int, S: IntSet, B: IntSet, **extra) -> Callable[[], dict]:
    return lambda: {"n": n, "S": S.to_text(), "B": B.to_text(), **extra}


def _graph_witness(G: LoopedGraph, **extra) -> Callable[[], dict]:
    return lambda: {"graph": G.to_dict(), **extra}


# -- link-graph suites --------------------------------------------------------


def _maximal_sets_by_n(n_max: int) -> dict[int, list[int]]:
    return {
        m: [s.mask for s in count_maximal_sum_free(m, emit=True).sets]
        for m in range(1, n_max + 1)
    }


def _extension_check(s_mask: int, b_mask: int, maximal: list[int]) -> tuple[bool, int]:
    """Every maximal sum-free M with S ⊆ M ⊆ S ∪ B must give an MIS M - S of L_S[B]."""
    nbrs, loops = link_masks(s_mask, b_mask)
    allowed = s_mask | b_mask
    for M in maximal:
        if M & s_mask != s_mask or M & ~allowed:
            continue
        I = M & ~s_mask
        if I & loops:
            return False, M
        for x, nb in nbrs.items():
            if I >> x & 1:
                if nb & I:
                    return False, M
            elif not loops >> x & 1 and not nb & I:
                return False, M
    return True, 0


def suite_lemma8(n: int = 14, trials: int = 1000, seed: int = DEFAULT_SEED, union_cap: int = 8) -> SuiteResult:
    """Extensions of S inside B that are maximal sum-free are maximal independent in L_S[B]."""
    res = SuiteResult("lemma8", {"n": n, "trials": trials, "seed": seed, "union_cap": union_cap})
    maximal = _maximal_sets_by_n(n)
    exhaustive = res.check("exhaustive-pairs")
    for m in range(1, n + 1):
        small = [s.mask for s in count_sum_free(m, emit=True).sets if len(s) <= union_cap]
        for s_mask in small:
            room = union_cap - s_mask.bit_count()
            for b_mask in small:
                if b_mask & s_mask or b_mask.bit_count() > room:
                    continue
                ok, M = _extension_check(s_mask, b_mask, maximal[m])
                exhaustive.record(ok, _pair_witness(m, IntSet(m, s_mask), IntSet(m, b_mask), M=IntSet(m, M).to_text()))
    rng = random.Random(seed)
    draws = res.check("random-pairs")
    for _ in range(trials):
        m = rng.randint(1, n)
        S = random_sum_free(rng, list(range(1, m + 1)), m, rng.randint(0, m))
        rest = [x for x in range(1, m + 1) if x not in S]
        B = random_sum_free(rng, rest, m, rng.randint(0, m))
        ok, M = _extension_check(S.mask, B.mask, maximal[m])
        draws.record(ok, _pair_witness(m, S, B, M=IntSet(m, M).to_text()))
    return res


def _even_source(rng: random.Random, n: int, cap: int) -> IntSet:
    evens = list(range(2, n + 1, 2))
    return random_sum_free(rng, evens, n, rng.randint(1, max(1, min(cap, len(evens)))))


def suite_lemma10(n: int = 200, trials: int = 500, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Link graphs of a sum-free S on vertices above n/2 have no triangles."""
    res = SuiteResult("lemma10", {"n": n, "trials": trials, "seed": seed})
    check = res.check("upper-half-triangle-free")
    rng = random.Random(seed)
    for _ in range(trials):
        m = rng.randint(2, n)
        S = random_sum_free(rng, list(range(1, m + 1)), m, rng.randint(0, m))
        upper = [x for x in range(m // 2 + 1, m + 1) if x not in S]
        B = IntSet.from_iter(m, (x for x in upper if rng.random() < rng.uniform(0.3, 1.0)))
        tris = list_triangles(build_link_graph(S, B))
        check.record(not tris, _pair_witness(m, S, B, triangle=list(tris[0][:3]) if tris else None))
    return res


def suite_claim12(n: int = 200, trials: int = 500, seed: int = DEFAULT_SEED, cap: int = 40) -> SuiteResult:
    """Every triangle of the coloured link graph on the odds has 0 or 2 BLUE edges."""
    res = SuiteResult("claim12", {"n": n, "trials": trials, "seed": seed})
    check = res.check("blue-count-0-or-2")
    rng = random.Random(seed)
    for _ in range(trials):
        m = rng.randint(3, n)
        S = _even_source(rng, m, cap)
        O = IntSet.from_iter(m, range(1, m + 1, 2))
        bad = [t for t in list_triangles(color_edges(build_link_graph(S, O))) if t.blue_count not in (0, 2)]
        check.record(not bad, _pair_witness(m, S, O, triangle=list(bad[0]) if bad else None))
    return res


def suite_forced24(n: int = 200, trials: int = 500, seed: int = DEFAULT_SEED, cap: int = 10) -> SuiteResult:
    """Each triple of S forces at most 24 triangles, and every triangle is forced by one."""
    res = SuiteResult("forced24", {"n": n, "trials": trials, "seed": seed, "cap": cap})
    at_most = res.check("at-most-24-per-triple")
    complete = res.check("every-triangle-forced")
    rng = random.Random(seed)
    for _ in range(trials):
        m = rng.randint(3, n)
        S = _even_source(rng, m, cap)
        O = IntSet.from_iter(m, range(1, m + 1, 2))
        forced: set[tuple[int, int, int]] = set()
        for s1, s2, s3 in combinations_with_replacement(S.members(), 3):
            recs = forced_triangles(s1, s2, s3, O)
            at_most.record(len(recs) <= 24, _pair_witness(m, S, O, triple=[s1, s2, s3], forced=len(recs)))
            forced.update((t.x, t.y, t.z) for t in recs)
        for t in list_triangles(build_link_graph(S, O)):
            complete.record((t.x, t.y, t.z) in forced, _pair_witness(m, S, O, triangle=list(t[:3])))
    return res


def suite_degree_bounds(n: int = 200, trials: int = 500, seed: int = DEFAULT_SEED, cap: int = 40) -> SuiteResult:
    """Minimum degree at least |S|/2 and maximum at most 2|S| + 2 on the odd vertices."""
    res = SuiteResult("degree-bounds", {"n": n, "trials": trials, "seed": seed})
    low = res.check("min-degree-at-least-half-S")
    high = res.check("max-degree-at-most-2S-plus-2")
    rng = random.Random(seed)
    for _ in range(trials):
        m = rng.randint(2, n)
        S = _even_source(rng, m, cap)
        O = IntSet.from_iter(m, range(1, m + 1, 2))
        delta, Delta = degree_profile(build_link_graph(S, O))
        k = len(S)
        low.record(2 * delta >= k, _pair_witness(m, S, O, delta=delta))
        high.record(Delta <= 2 * k + 2, _pair_witness(m, S, O, Delta=Delta))
    return res


# -- MIS suites -----------------------------------------------------------------


def suite_moon_moser(n: int = 21, trials: int = 200, seed: int = DEFAULT_SEED) -> SuiteResult:
    """MIS(G) <= 3^{|G|/3}, with equality exactly on disjoint unions of triangles."""
    res = SuiteResult("moon-moser", {"n": n, "trials": trials, "seed": seed})
    bound = res.check("bound")
    equality = res.check("equality-iff-disjoint-triangles")
    rng = random.Random(seed)
    graphs = [disjoint_triangles(k) for k in range(1, n // 3 + 1)]
    for size in range(1, n + 1):
        graphs.extend(random_looped_graph(rng, size) for _ in range(trials))
    for G in graphs:
        rep = extremal_bound_report(G)
        bound.record(rep.moon_moser_ok, _graph_witness(G, mis=rep.mis_count))
        equality.record(rep.moon_moser_equal == is_disjoint_triangles(G), _graph_witness(G, mis=rep.mis_count))
    return res


def suite_hujter_tuza(n: int = 24, trials: int = 200, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Triangle-free graphs have MIS(G) <= 2^{|G|/2}, with equality exactly on perfect matchings."""
    res = SuiteResult("hujter-tuza", {"n": n, "trials": trials, "seed": seed})
    bound = res.check("bound")
    equality = res.check("equality-iff-perfect-matching")
    rng = random.Random(seed)
    graphs = [perfect_matching(k) for k in range(1, n // 2 + 1)]
    for size in range(1, n + 1):
        graphs.extend(random_triangle_free_graph(rng, size) for _ in range(trials))
    for G in graphs:
        rep = extremal_bound_report(G)
        bound.record(bool(rep.triangle_free and rep.hujter_tuza_ok), _graph_witness(G, mis=rep.mis_count))
        equality.record(bool(rep.hujter_tuza_equal) == is_perfect_matching(G), _graph_witness(G, mis=rep.mis_count))
    return res


def suite_lemma6(n: int = 21, trials: int = 200, seed: int = DEFAULT_SEED) -> SuiteResult:
    """MIS(G) <= 2^{(|G| + |T|)/2} for the greedy triangle hitting set T."""
    res = SuiteResult("lemma6", {"n": n, "trials": trials, "seed": seed})
    hitting = res.check("G-minus-T-triangle-free")
    bound = res.check("bound")
    rng = random.Random(seed)
    for size in range(1, n + 1):
        for _ in range(trials):
            G = random_looped_graph(rng, size)
            T = triangle_hitting_set(G)
            hitting.record(G.without(T).is_triangle_free(), _graph_witness(G, T=sorted(T)))
            rep = extremal_bound_report(G)
            bound.record(rep.lemma6_ok, _graph_witness(G, T=sorted(T), mis=rep.mis_count))
    return res


def suite_peeling(n: int = 16, trials: int = 100, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Peeling transcripts certify all four inequalities for every MIS of random graphs."""
    res = SuiteResult("peeling", {"n": n, "trials": trials, "seed": seed})
    names = ("picks-at-most-n-over-b", "I-cap-U-inside-Z", "I-cap-U-maximal-in-Z", "Z-size-bound")
    checks = [res.check(name) for name in names]
    rng = random.Random(seed)
    for _ in range(trials):
        G = _min_degree_one(rng, random_looped_graph(rng, rng.randint(2, n)))
        _, sets = enumerate_mis(G, emit=True)
        for I in sets:
            tr = sapozhenko_peel(G, I)
            flags = (tr.picks_ok, tr.cover_ok, tr.maximal_in_Z_ok, tr.z_bound_ok)
            for c, ok in zip(checks, flags):
                c.record(ok, _graph_witness(G, I=sorted(I)))
    return res


# -- structure suites -------------------------------------------------------------


def suite_dfst(n: int = 18, trials: int = 0, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Every sum-free subset of [1..m], m <= n, is small, all odd, or has min >= size."""
    res = SuiteResult("dfst", {"n": n})
    check = res.check("some-alternative-holds")
    for m in range(1, n + 1):
        for S in count_sum_free(m, emit=True).sets:
            check.record(dfst_classify(S, m).any, lambda S=S, m=m: {"n": m, "S": S.to_text()})
    return res


def suite_decompose(n: int = 200, trials: int = 500, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Greedy removal yields an exact partition with a sum-free part and steady progress."""
    res = SuiteResult("decompose", {"n": n, "trials": trials, "seed": seed})
    partition = res.check("partition-exact")
    sum_free = res.check("B-sum-free")
    progress = res.check("triple-count-strictly-decreases")
    rng = random.Random(seed)
    for _ in range(trials):
        m = rng.randint(1, n)
        p = rng.uniform(0.05, 0.6)
        A = IntSet.from_iter(m, (x for x in range(1, m + 1) if rng.random() < p))
        d = greedy_removal_decompose(A)
        witness = lambda A=A, m=m: {"n": m, "A": A.to_text()}
        partition.record((d.B | d.C) == A and d.B.isdisjoint(d.C), witness)
        sum_free.record(is_sum_free_mask(d.B.mask), witness)
        counts = [schur_triple_count(A)]
        mask = A.mask
        for v, _ in d.removal_order:
            mask &= ~(1 << v)
            counts.append(schur_triple_count(IntSet(m, mask)))
        progress.record(
            all(b < a for a, b in zip(counts, counts[1:])) and len(d.removal_order) <= len(A),
            witness,
        )
    return res


def suite_constructions(n: int = 20, trials: int = 0, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Both lower-bound families are sum-free and frozen in their discriminating region."""
    from .constructions import CEFamilySpec, QuarterFamilySpec

    res = SuiteResult("constructions", {"n": n})
    sf = res.check("members-sum-free")
    frozen = res.check("non-extendable")
    for m in range(4, n + 1):
        ce = CEFamilySpec.for_n(m)
        odds_below = range(1, ce.m, 2)
        for i in range(len(ce)):
            S = ce.member(i)
            sf.record(is_sum_free_mask(S.mask), lambda S=S: {"n": m, "S": S.to_text()})
            frozen.record(not non_extendable(S, odds_below), lambda S=S: {"n": m, "S": S.to_text()})
        if m % 4 == 0:
            q = QuarterFamilySpec(m)
            for i in range(len(q)):
                S = q.member(i)
                sf.record(is_sum_free_mask(S.mask), lambda S=S: {"n": m, "S": S.to_text()})
                frozen.record(not non_extendable(S, q.I2), lambda S=S: {"n": m, "S": S.to_text()})
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "lemma8": suite_lemma8,
    "lemma10": suite_lemma10,
    "claim12": suite_claim12,
    "forced24": suite_forced24,
    "degree-bounds": suite_degree_bounds,
    "moon-moser": suite_moon_moser,
    "hujter-tuza": suite_hujter_tuza,
    "lemma6": suite_lemma6,
    "peeling": suite_peeling,
    "dfst": suite_dfst,
    "decompose": suite_decompose,
    "constructions": suite_constructions,
}


def run_suite(name: str, n: int | None = None, trials: int | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    kwargs: dict = {"seed": seed}
    if n is not None:
        kwargs["n"] = n
    if trials is not None:
        kwargs["trials"] = trials
    return fn(**kwargs)

