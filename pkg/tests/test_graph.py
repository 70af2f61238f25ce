import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from rainbowsub import errors
from rainbowsub.generators import complete, hypercube
from rainbowsub.graph import build, induced_subgraph, is_proper, stats
from rainbowsub.io import dumps, loads

from .conftest import colored_graphs, random_small_graph


def test_rainbow_triangle():
    g = build(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])
    assert g.m == 3
    assert g.color_count == 3
    assert stats(g).avg_degree == 2


def test_improper_coloring_names_vertex():
    with pytest.raises(errors.ImproperColoring) as info:
        build(3, [(0, 1, 0), (1, 2, 0)])
    assert info.value.vertex == 1
    assert info.value.edge == (1, 2, 0)


def test_self_loop():
    with pytest.raises(errors.SelfLoop) as info:
        build(2, [(0, 0, 0)])
    assert info.value.edge == (0, 0, 0)


def test_duplicate_edge_either_orientation():
    with pytest.raises(errors.DuplicateEdge) as info:
        build(3, [(0, 1, 0), (1, 0, 1)])
    assert info.value.edge == (1, 0, 1)


def test_vertex_out_of_range():
    with pytest.raises(errors.VertexOutOfRange):
        build(2, [(0, 2, 0)])


def test_color_count_default_and_empty():
    assert build(4, []).color_count == 0
    assert build(2, [(0, 1, 5)]).color_count == 6


def test_edge_color_lookup():
    g = build(4, [(0, 3, 2), (1, 3, 0), (0, 1, 1)])
    assert g.edge_color(3, 0) == 2
    assert g.edge_color(1, 0) == 1
    assert g.edge_color(2, 3) is None
    assert list(g.neighbors(3)) == [0, 1]


def test_induced_single_edge():
    g = build(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])
    sub, mapping = induced_subgraph(g, [0, 1])
    assert sub.edges() == [(0, 1, 0)]
    assert mapping == {0: 0, 1: 1}


def test_induced_identity():
    g = complete(6)
    sub, mapping = induced_subgraph(g, range(6))
    assert sub == g
    assert mapping == {i: i for i in range(6)}


def test_induced_hypercube_face():
    # face of Q_3 with bit 2 clear: 0-1-3-2, flips alternate between bit 0 and bit 1
    sub, mapping = induced_subgraph(hypercube(3), [0, 1, 2, 3])
    assert sub.m == 4
    assert sorted(sub.edges()) == [(0, 1, 0), (0, 2, 1), (1, 3, 1), (2, 3, 0)]
    cycle = [0, 1, 3, 2, 0]
    colors = [sub.edge_color(a, b) for a, b in zip(cycle, cycle[1:])]
    assert colors == [0, 1, 0, 1]


def test_induced_out_of_range():
    with pytest.raises(errors.VertexOutOfRange):
        induced_subgraph(complete(3), [0, 5])


def test_stats_examples():
    s = stats(complete(4))
    assert (s.n, s.m, s.avg_degree, s.min_degree, s.max_degree) == (4, 6, 3, 3, 3)
    assert stats(build(3, [(0, 1, 0), (1, 2, 1)])).avg_degree == Fraction(4, 3)
    assert stats(hypercube(10)).avg_degree == 10


def test_stats_empty():
    with pytest.raises(errors.EmptyGraph):
        stats(build(0, []))


@given(colored_graphs())
@settings(max_examples=100, deadline=None)
def test_roundtrip_through_text(g):
    assert loads(dumps(g)) == g


@given(colored_graphs())
@settings(max_examples=100, deadline=None)
def test_stats_invariants(g):
    s = stats(g)
    assert s.min_degree <= s.avg_degree <= s.max_degree
    assert sum(g.degrees()) == 2 * s.m


def test_induced_edge_count_matches_double_loop():
    rng = random.Random(11)
    for _ in range(200):
        g = random_small_graph(rng, max_n=8)
        S = [v for v in range(g.n) if rng.random() < 0.6]
        sub, mapping = induced_subgraph(g, S)
        expected = sum(1 for a in S for b in S if a < b and g.has_edge(a, b))
        assert sub.m == expected
        for u, v, c in sub.edges():
            old = {new: old for old, new in mapping.items()}
            assert g.edge_color(old[u], old[v]) == c
        assert is_proper(sub)
