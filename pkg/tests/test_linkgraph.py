import json
from itertools import combinations, permutations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import sum_free
from sumfree import GroundInterval, IntSet
from sumfree.linkgraph import (
    build_link_graph,
    color_edges,
    degree_profile,
    forced_triangles,
    list_triangles,
    type_matrix,
)


def S_B(n, s, b):
    return IntSet.from_iter(n, s), IntSet.from_iter(n, b)


def literal_edges(S, B):
    return {
        (x, y)
        for x, y in combinations(sorted(B), 2)
        if any(x + y == z or x + z == y or y + z == x for z in S)
    }


def literal_loops(S, B):
    return {x for x in B if 2 * x in S or any(a + b == x or x + a == b for a in S for b in S)}


def test_example_path_with_loop():
    L = build_link_graph(*S_B(7, [2], [1, 3, 5, 7]))
    assert L.edges() == [(1, 3), (3, 5), (5, 7)]
    assert L.loops == {1}
    assert degree_profile(L) == (1, 3)


def test_example_loops_only():
    L = build_link_graph(*S_B(4, [1, 3], [2, 4]))
    assert L.edges() == []
    assert L.loops == {2, 4}


def test_empty_source_gives_empty_graph():
    L = build_link_graph(IntSet(9), GroundInterval(9).full())
    assert L.edges() == [] and not L.loops
    assert list_triangles(L) == []
    assert degree_profile(build_link_graph(IntSet(3), IntSet(3))) == (0, 0)


def test_intersecting_inputs_rejected():
    with pytest.raises(ValueError):
        build_link_graph(*S_B(5, [2, 3], [3, 5]))
    with pytest.raises(ValueError):
        build_link_graph(IntSet(5), IntSet(6))


pairs = st.integers(1, 40).flatmap(
    lambda n: st.tuples(
        st.just(n), st.sets(st.integers(1, n)), st.sets(st.integers(1, n))
    )
)


@given(pairs)
@settings(max_examples=300)
def test_matches_literal_definition(data):
    n, s, b = data
    b = b - s
    L = build_link_graph(*S_B(n, s, b))
    assert set(L.edges()) == literal_edges(s, b)
    assert set(L.loops) == literal_loops(s, b)
    assert list(L.vertices) == sorted(b)


def test_coloring_examples():
    L = color_edges(build_link_graph(*S_B(10, [2, 10], [3, 5, 7])))
    assert L.colors == {(3, 5): "BLUE", (5, 7): "BLUE", (3, 7): "RED"}
    tris = list_triangles(L)
    assert [(t.x, t.y, t.z, t.blue_count) for t in tris] == [(3, 5, 7, 2)]

    L = color_edges(build_link_graph(*S_B(7, [2], [1, 3, 5, 7])))
    assert set(L.colors.values()) == {"BLUE"}

    L = color_edges(build_link_graph(*S_B(14, [6, 10, 14], [1, 5, 9])))
    assert L.colors == {(1, 5): "RED", (1, 9): "RED", (5, 9): "RED"}
    (t,) = list_triangles(L)
    assert (t.blue_count, t.type_tag) == (0, 1)


def test_coloring_requires_odd_even_setting():
    with pytest.raises(ValueError):
        color_edges(build_link_graph(*S_B(8, [2], [1, 4])))
    with pytest.raises(ValueError):
        color_edges(build_link_graph(*S_B(8, [3], [1, 5])))


def test_blue_takes_precedence():
    # 1-3: gap 2 in S and sum 4 in S
    L = color_edges(build_link_graph(*S_B(9, [2, 4], [1, 3])))
    assert L.colors[(1, 3)] == "BLUE"


def test_json_shape():
    L = color_edges(build_link_graph(*S_B(10, [2, 10], [3, 5, 7])))
    data = json.loads(L.to_json())
    assert data == {
        "n": 10,
        "S": [2, 10],
        "B": [3, 5, 7],
        "edges": [[3, 5], [3, 7], [5, 7]],
        "loops": [5],
        "colors": {"3-5": "BLUE", "3-7": "RED", "5-7": "BLUE"},
    }


@given(st.integers(2, 60), st.data())
@settings(max_examples=200)
def test_upper_half_is_triangle_free(n, data):
    s = data.draw(st.sets(st.integers(1, n), max_size=12))
    assume(sum_free(s))
    upper = [x for x in range(n // 2 + 1, n + 1) if x not in s]
    b = data.draw(st.sets(st.sampled_from(upper))) if upper else set()
    assert list_triangles(build_link_graph(*S_B(n, s, b))) == []


def test_type_matrices():
    assert type_matrix(1) == ((1, 1, 0), (0, 1, 1), (1, 0, 1))
    for tag in (1, 2, 3, 4):
        (a, b, c), (d, e, f), (g, h, i) = type_matrix(tag)
        assert abs(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) == 2


def brute_forced(s1, s2, s3, B):
    """Triangles x<y<z in B with (s1,x,y), (s2,y,z), (s3,x,z) Schur triples, some ordering."""
    def rel(s, a, b):
        return s == a + b or s == abs(a - b)

    out = set()
    for x, y, z in combinations(sorted(B), 3):
        for a, b, c in set(permutations((s1, s2, s3))):
            if rel(a, x, y) and rel(b, y, z) and rel(c, x, z):
                out.add((x, y, z))
    return out


def test_forced_examples():
    odds = GroundInterval(15).odds()
    recs = forced_triangles(6, 10, 14, odds)
    assert (1, 5, 9, 0, 1) in recs
    assert forced_triangles(2, 2, 2, GroundInterval(41).odds()) == []
    assert brute_forced(2, 2, 2, set(GroundInterval(41).odds())) == set()


@given(st.lists(st.integers(1, 20).map(lambda k: 2 * k), min_size=3, max_size=3))
@settings(max_examples=300)
def test_forced_matches_brute_force_for_sum_free_triples(triple):
    assume(sum_free(set(triple)))
    n = 45
    odds = GroundInterval(n).odds()
    recs = forced_triangles(*triple, odds)
    assert {(t.x, t.y, t.z) for t in recs} == brute_forced(*triple, set(odds))
    assert len(recs) <= 24


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_forced_never_exceeds_24(a, b, c):
    assert len(forced_triangles(a, b, c, GroundInterval(120).full())) <= 24


def test_forced_triangles_are_triangles_of_the_link_graph():
    n = 61
    S = IntSet.from_iter(n, [4, 10, 22])
    O = GroundInterval(n).odds()
    tris = {(t.x, t.y, t.z) for t in list_triangles(build_link_graph(S, O))}
    for trip in [(4, 10, 22), (4, 4, 10), (22, 10, 4), (10, 10, 22)]:
        for t in forced_triangles(*trip, O):
            assert (t.x, t.y, t.z) in tris


@given(st.integers(3, 120), st.data())
@settings(max_examples=100)
def test_degree_bounds_on_odds(n, data):
    evens = list(range(2, n + 1, 2))
    s = data.draw(st.sets(st.sampled_from(evens), min_size=1, max_size=10))
    assume(sum_free(s))
    delta, Delta = degree_profile(build_link_graph(*S_B(n, s, range(1, n + 1, 2))))
    assert 2 * delta >= len(s)
    assert Delta <= 2 * len(s) + 2
