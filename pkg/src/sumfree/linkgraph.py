"""Link graphs of a sum-free set S on a base set B.

Vertices are the members of B. Two distinct vertices x, y are joined when
{x, y, s} is a Schur triple for some s in S (that is, x + y ∈ S or |x - y| ∈ S).
A vertex x carries a loop when 2x ∈ S, when x is a sum of two members of S,
or when x + s = s' for some s, s' ∈ S.

In the odd-vertex/even-source setting edges are coloured BLUE when
|x - y| ∈ S and RED otherwise (then x + y ∈ S).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from itertools import permutations
from typing import Literal, NamedTuple

from .groundset import IntSet, bits, difference_mask, sumset_mask
from .mis import LoopedGraph

Color = Literal["BLUE", "RED"]


@dataclass(frozen=True)
class LinkGraph:
    S: IntSet
    B: IntSet
    graph: LoopedGraph
    colors: dict[tuple[int, int], Color] | None = None

    @property
    def n(self) -> int:
        return self.S.n

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.graph.vertices

    @property
    def loops(self) -> frozenset[int]:
        return self.graph.loops

    def edges(self) -> list[tuple[int, int]]:
        return self.graph.edges()

    def to_dict(self) -> dict:
        colors = {}
        if self.colors is not None:
            colors = {f"{x}-{y}": self.colors[(x, y)] for x, y in sorted(self.colors)}
        return {
            "n": self.n,
            "S": self.S.members(),
            "B": self.B.members(),
            "edges": [list(e) for e in self.edges()],
            "loops": sorted(self.loops),
            "colors": colors,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def link_masks(s_mask: int, b_mask: int) -> tuple[dict[int, int], int]:
    """Neighbour bitmask of every vertex of B, and the bitmask of looped vertices."""
    top = 2 * max(s_mask.bit_length(), b_mask.bit_length()) + 2
    mirror = 0
    halves = 0
    for s in bits(s_mask):
        mirror |= 1 << (top - s)
        if s % 2 == 0:
            halves |= 1 << (s // 2)
    nbrs = {}
    for x in bits(b_mask):
        # y = x + s, y = s - x, y = x - s
        reach = (s_mask << x) | (s_mask >> x) | ((mirror << x) >> top)
        nbrs[x] = reach & b_mask & ~(1 << x)
    loops = (halves | sumset_mask(s_mask) | difference_mask(s_mask)) & b_mask
    return nbrs, loops


def build_link_graph(S: IntSet, B: IntSet) -> LinkGraph:
    if S.n != B.n:
        raise ValueError(f"S and B live in different universes ({S.n} vs {B.n})")
    if not S.isdisjoint(B):
        raise ValueError(f"S and B must be disjoint; common elements {(S & B).members()}")
    nbrs, loop_mask = link_masks(S.mask, B.mask)
    adj = {x: frozenset(bits(m)) for x, m in nbrs.items()}
    graph = LoopedGraph(tuple(nbrs), adj, frozenset(bits(loop_mask)))
    return LinkGraph(S, B, graph)


def _check_odd_even(L: LinkGraph) -> None:
    if any(x % 2 == 0 for x in L.B):
        raise ValueError("edge colours need the base set to consist of odd numbers")
    if any(s % 2 == 1 for s in L.S):
        raise ValueError("edge colours need the source set to consist of even numbers")


def color_edges(L: LinkGraph) -> LinkGraph:
    """Colour every edge: BLUE when the gap lies in S, otherwise RED."""
    _check_odd_even(L)
    colors: dict[tuple[int, int], Color] = {}
    for x, y in L.edges():
        colors[(x, y)] = "BLUE" if (y - x) in L.S else "RED"
    return replace(L, colors=colors)


class TriangleRecord(NamedTuple):
    x: int
    y: int
    z: int
    blue_count: int | None
    type_tag: int | None


def _type_tag(xy: bool, yz: bool, xz: bool) -> int | None:
    """Pattern tag from BLUE flags: 1 all RED; 2, 3, 4 when only xy, yz, xz is RED."""
    pattern = (xy, yz, xz)
    return {
        (False, False, False): 1,
        (False, True, True): 2,
        (True, False, True): 3,
        (True, True, False): 4,
    }.get(pattern)


def list_triangles(L: LinkGraph) -> list[TriangleRecord]:
    out = []
    for x, y, z in L.graph.triangles():
        if L.colors is None:
            out.append(TriangleRecord(x, y, z, None, None))
            continue
        flags = [L.colors[e] == "BLUE" for e in ((x, y), (y, z), (x, z))]
        out.append(TriangleRecord(x, y, z, sum(flags), _type_tag(*flags)))
    return out


# Each row pairs one source element with an edge in the order (xy, yz, xz):
# +1 +1 is a sum edge (RED), -1 +1 a gap edge (BLUE). Adjugates solve M u = s.
_TYPE_MATRICES = {
    1: ((1, 1, 0), (0, 1, 1), (1, 0, 1)),
    2: ((1, 1, 0), (0, -1, 1), (-1, 0, 1)),
    3: ((-1, 1, 0), (0, 1, 1), (-1, 0, 1)),
    4: ((-1, 1, 0), (0, -1, 1), (1, 0, 1)),
}


def _det3(m) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _adjugate(m) -> tuple[tuple[int, ...], ...]:
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


_SOLVERS = {t: (_adjugate(m), _det3(m)) for t, m in _TYPE_MATRICES.items()}


def type_matrix(type_tag: int) -> tuple[tuple[int, ...], ...]:
    return _TYPE_MATRICES[type_tag]


def forced_triangles(s1: int, s2: int, s3: int, B: IntSet) -> list[TriangleRecord]:
    """Triangles {x < y < z} ⊆ B whose edges xy, yz, xz are witnessed by s1, s2, s3.

    For each of the four colour patterns and each ordering of (s1, s2, s3) the
    pattern's 3x3 system has a unique rational solution (determinant ±2); it is
    kept when integral, increasing and inside B. A triangle found under several
    orderings is reported once, with the first pattern that produced it.
    """
    seen: dict[tuple[int, int, int], TriangleRecord] = {}
    orders = list(dict.fromkeys(permutations((s1, s2, s3))))
    for tag, (adj, det) in _SOLVERS.items():
        for s in orders:
            u = []
            for row in adj:
                num = row[0] * s[0] + row[1] * s[1] + row[2] * s[2]
                if num % det:
                    break
                u.append(num // det)
            else:
                x, y, z = u
                if 1 <= x < y < z and x in B and y in B and z in B:
                    key = (x, y, z)
                    if key not in seen:
                        seen[key] = TriangleRecord(x, y, z, 0 if tag == 1 else 2, tag)
    return sorted(seen.values())


def degree_profile(L: LinkGraph) -> tuple[int, int]:
    """(minimum degree, maximum degree) with loops counting 2; (0, 0) when empty."""
    return L.graph.min_degree(), L.graph.max_degree()
