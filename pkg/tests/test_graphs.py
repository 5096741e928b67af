import random

import pytest

from locdom.enumeration import are_isomorphic, random_graph
from locdom.graphs import (
    Graph,
    classify,
    complement,
    complete_graph,
    complete_join,
    corona,
    cycle_graph,
    empty_graph,
    find_twins,
    is_clique,
    is_connected,
    is_independent_set,
    is_twin_free,
    mask_members,
    path_graph,
    star_graph,
    vertex_mask,
)


def test_graph_invariant_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10,))  # wrong row count
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b10))  # loop at 0
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b10,))  # out of range
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_vertex_mask_roundtrip():
    assert vertex_mask({0, 2}, 4) == 0b0101
    assert vertex_mask(0b0101, 4) == 0b0101
    assert mask_members(0b1010) == frozenset({1, 3})
    with pytest.raises(ValueError):
        vertex_mask({4}, 4)
    with pytest.raises(ValueError):
        vertex_mask(1 << 4, 4)


def test_basic_accessors(p4):
    assert p4.n == 4
    assert p4.num_edges == 3
    assert p4.degree(0) == 1 and p4.degree(1) == 2
    assert p4.neighbors(1) == frozenset({0, 2})
    assert list(p4.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert p4.degree_sequence() == (2, 2, 1, 1)
    assert star_graph(3).isolated_vertices() == frozenset()
    assert empty_graph(2).isolated_vertices() == frozenset({0, 1})


def test_find_twins_examples(p4):
    assert find_twins(complete_graph(2)) == [(0, 1, "closed")]
    assert find_twins(path_graph(3)) == [(0, 2, "open")]
    assert find_twins(p4) == []
    assert is_twin_free(p4)
    assert not is_twin_free(cycle_graph(4))


def test_find_twins_agrees_with_direct_comparison():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng.randint(0, 9), rng, rng.choice([0.2, 0.5, 0.8]))
        expected = []
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if g.neighbors(u) == g.neighbors(v):
                    expected.append((u, v, "open"))
                elif g.neighbors(u) | {u} == g.neighbors(v) | {v}:
                    expected.append((u, v, "closed"))
        assert find_twins(g) == expected
        assert is_twin_free(g) == (not expected)


def test_classify_p4(p4):
    kinds = classify(p4)
    assert kinds.is_tree and kinds.is_bipartite
    assert kinds.is_split
    assert kinds.split_partition == (vertex_mask({1, 2}, 4), vertex_mask({0, 3}, 4))
    assert kinds.is_cobipartite
    assert kinds.cobip_partition == (vertex_mask({0, 1}, 4), vertex_mask({2, 3}, 4))


def test_classify_k3_and_c5():
    kinds = classify(complete_graph(3))
    assert kinds.is_split and kinds.split_partition == (0b111, 0)
    assert kinds.is_cobipartite
    kinds = classify(cycle_graph(5))
    assert not kinds.is_split
    assert not kinds.is_cobipartite
    assert not kinds.is_bipartite
    assert not kinds.is_tree


def test_classify_partitions_certify():
    rng = random.Random(11)
    for _ in range(300):
        g = random_graph(rng.randint(0, 8), rng, rng.choice([0.3, 0.5, 0.7]))
        kinds = classify(g)
        if kinds.split_partition is not None:
            cl, ind = kinds.split_partition
            assert cl & ind == 0 and cl | ind == g.full_mask
            assert is_clique(g, cl) and is_independent_set(g, ind)
        if kinds.cobip_partition is not None:
            a, b = kinds.cobip_partition
            assert a & b == 0 and a | b == g.full_mask
            assert is_clique(g, a) and is_clique(g, b)


def test_complement():
    assert complement(complete_graph(3)) == empty_graph(3)
    assert are_isomorphic(complement(path_graph(4)), path_graph(4))
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng.randint(0, 10), rng)
        assert complement(complement(g)) == g


def test_complete_join():
    assert complete_join([complete_graph(1), complete_graph(1)]) == complete_graph(2)
    assert complete_join([complete_graph(2), complete_graph(2)]) == complete_graph(4)
    with pytest.raises(ValueError):
        complete_join([])
    gs = [path_graph(2), path_graph(3), path_graph(1)]
    j = complete_join(gs)
    assert j.n == 6
    assert j.num_edges == sum(g.num_edges for g in gs) + (2 * 3 + 2 * 1 + 3 * 1)


def test_corona():
    assert corona(complete_graph(1)) == complete_graph(2)
    assert are_isomorphic(corona(complete_graph(2)), path_graph(4))
    g = corona(cycle_graph(4))
    assert g.n == 8
    for v in range(4):
        assert g.degree(4 + v) == 1 and g.has_edge(v, 4 + v)


def test_connectivity():
    assert is_connected(path_graph(5))
    assert is_connected(empty_graph(0))
    assert is_connected(complete_graph(1))
    assert not is_connected(empty_graph(2))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
