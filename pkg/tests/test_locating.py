import random
from itertools import combinations

import pytest

from locdom.enumeration import connected_graphs, random_graph, random_graph_without_isolated
from locdom.extremal import path_power_graph, two_hub_graph
from locdom.graphs import (
    complete_graph,
    cycle_graph,
    empty_graph,
    is_twin_free,
    path_graph,
    star_graph,
    vertex_mask,
)
from locdom.locating import (
    bc_private_dominating_set,
    certify,
    gamma_L_exact,
    is_combinable,
    is_dominating,
    is_locating_dominating,
    is_locating_set,
    min_dominating_exact,
    min_locating_set_exact,
    min_vertex_cover_exact,
    partition_signature,
)


def brute_min_size(g, predicate):
    """Independent oracle: scan all subsets by increasing size."""
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            if predicate(g, frozenset(combo)):
                return k
    raise AssertionError("no feasible subset")


def test_is_dominating(p4):
    assert is_dominating(p4, {1, 2})
    assert not is_dominating(p4, {0})
    assert not is_dominating(complete_graph(3), frozenset())
    assert is_dominating(empty_graph(0), frozenset())
    with pytest.raises(ValueError):
        is_dominating(p4, {4})


def test_is_locating_dominating(p4):
    assert is_locating_dominating(p4, {1, 2})
    assert is_locating_dominating(p4, {1, 3})
    assert is_locating_dominating(p4, {0, 3})
    p5 = path_graph(5)
    assert not is_locating_dominating(p5, {2})


def test_is_locating_set(p4):
    k2 = complete_graph(2)
    assert is_locating_set(k2, {0})
    assert not is_locating_set(k2, frozenset())
    assert is_locating_set(p4, {1, 2})
    # one undominated vertex is fine for a locating set
    assert is_locating_set(p4, {0, 1})
    assert not is_locating_dominating(p4, {0, 1})


def test_partition_signature_p4(p4):
    sig = partition_signature(p4, {1})
    assert sig.base_set == frozenset({1})
    assert sig.parts == (
        (frozenset({1}), frozenset({0, 2})),
        (frozenset(), frozenset({3})),
    )
    assert sig.num_parts == 2
    assert sig.singletons == frozenset({3})
    assert sig.grouped == frozenset({0, 2})
    assert sig.num_singletons == 1
    assert sig.num_grouped_parts == 1

    sig = partition_signature(p4, {1, 2})
    assert sig.num_parts == 2
    assert sig.num_singletons == 2
    assert sig.num_grouped_parts == 0

    sig = partition_signature(p4, {0, 1, 2, 3})
    assert sig.parts == () and sig.num_parts == 0
    assert sig.num_singletons == 0 and sig.num_grouped_parts == 0


def test_partition_signature_properties():
    rng = random.Random(5)
    for _ in range(200):
        g = random_graph_without_isolated(rng.randint(1, 9), rng)
        s = frozenset(v for v in range(g.n) if rng.random() < 0.4)
        sig = partition_signature(g, s)
        rebuilt = set(sig.base_set)
        for _, members in sig.parts:
            assert not rebuilt & members
            rebuilt |= members
        assert rebuilt == set(range(g.n))
        assert sig.num_singletons + sig.num_grouped_parts == sig.num_parts
        assert sig.singletons | sig.grouped == set(range(g.n)) - s
        # all signatures pairwise distinct
        signatures = [s_ for s_, _ in sig.parts]
        assert len(set(signatures)) == len(signatures)
        # removing one vertex of a 2-element part leaves its partner alone
        for part_sig, members in sig.parts:
            if len(members) == 2:
                a, b = sorted(members)
                shrunk = partition_signature(g, s | {a})
                assert any(m == frozenset({b}) for _, m in shrunk.parts)


def test_min_dominating(p4):
    assert len(min_dominating_exact(p4)) == 2
    assert len(min_dominating_exact(complete_graph(3))) == 1
    assert len(min_dominating_exact(two_hub_graph(4))) == 2
    # isolated vertices must be picked up
    g = empty_graph(3)
    assert min_dominating_exact(g) == frozenset({0, 1, 2})


def test_min_dominating_matches_bruteforce():
    rng = random.Random(13)
    for _ in range(120):
        g = random_graph_without_isolated(rng.randint(1, 8), rng, rng.choice([0.3, 0.6]))
        expected = brute_min_size(g, is_dominating)
        assert len(min_dominating_exact(g)) == expected


def test_min_vertex_cover(p4):
    assert len(min_vertex_cover_exact(p4)) == 2
    assert len(min_vertex_cover_exact(complete_graph(3))) == 2
    assert min_vertex_cover_exact(star_graph(5)) == frozenset({0})


def test_min_vertex_cover_matches_bruteforce():
    def is_cover(g, s):
        return all(u in s or v in s for u, v in g.edges())

    rng = random.Random(17)
    for _ in range(120):
        g = random_graph(rng.randint(0, 8), rng, rng.choice([0.3, 0.6]))
        assert len(min_vertex_cover_exact(g)) == brute_min_size(g, is_cover)


def test_gamma_l_examples(p4):
    assert gamma_L_exact(p4)[0] == 2
    assert gamma_L_exact(path_power_graph(3))[0] == 3
    assert gamma_L_exact(two_hub_graph(4))[0] == 6
    # witness verifies
    for g in (p4, path_power_graph(3), star_graph(4)):
        value, witness = gamma_L_exact(g)
        assert len(witness) == value
        assert is_locating_dominating(g, witness)


def test_gamma_l_matches_bruteforce():
    rng = random.Random(19)
    for _ in range(100):
        g = random_graph_without_isolated(rng.randint(1, 8), rng, rng.choice([0.3, 0.6]))
        assert gamma_L_exact(g)[0] == brute_min_size(g, is_locating_dominating)


def test_min_locating_examples(p4):
    assert min_locating_set_exact(complete_graph(2))[0] == 1
    assert min_locating_set_exact(p4)[0] == 2
    assert min_locating_set_exact(path_power_graph(2))[0] == 2
    value, witness = min_locating_set_exact(cycle_graph(6))
    assert is_locating_set(cycle_graph(6), witness) and len(witness) == value


def test_min_locating_matches_bruteforce():
    rng = random.Random(23)
    for _ in range(100):
        g = random_graph_without_isolated(rng.randint(1, 8), rng, rng.choice([0.3, 0.6]))
        assert min_locating_set_exact(g)[0] == brute_min_size(g, is_locating_set)


def test_bc_private_dominating_set(p4):
    assert bc_private_dominating_set(p4) == frozenset({1, 2})
    assert bc_private_dominating_set(complete_graph(2)) == frozenset({0})
    assert bc_private_dominating_set(cycle_graph(4)) == frozenset({0, 1})
    with pytest.raises(ValueError):
        bc_private_dominating_set(empty_graph(1))


def test_bc_swap_fallback_agrees():
    from locdom.locating import _bc_by_swaps, _min_dominating_mask, _has_private_neighbor_property

    rng = random.Random(29)
    for _ in range(150):
        g = random_graph_without_isolated(rng.randint(2, 9), rng, rng.choice([0.3, 0.6]))
        start = _min_dominating_mask(g)
        swapped = _bc_by_swaps(g, start)
        if swapped is not None:
            assert swapped.bit_count() == start.bit_count()
            assert is_dominating(g, swapped)
            assert _has_private_neighbor_property(g, swapped)


def test_is_combinable(p4):
    assert is_combinable(path_power_graph(2))
    assert is_combinable(path_power_graph(3))
    assert is_combinable(complete_graph(2))
    # P3 is not: {0} locates (leaving 2 undominated) but gamma_L(P3) = 2
    assert not is_combinable(path_graph(3))
    with pytest.raises(ValueError):
        is_combinable(empty_graph(2))


def test_certify_flags(p4):
    cert = certify(p4, {1, 2}, method="manual")
    assert cert.is_dominating and cert.is_locating and cert.is_locating_dominating
    assert cert.size == 2 and cert.method == "manual"
    cert = certify(p4, {0, 1}, method="manual")
    assert cert.is_locating and not cert.is_dominating and not cert.is_locating_dominating


def test_parameter_inequalities_exhaustive_small():
    # gamma <= gamma_L, minloc <= gamma_L <= minloc + 1 on every connected
    # graph up to order 7 (the order-8 sweep lives in the acceptance suite)
    for n in range(1, 8):
        for g in connected_graphs(n):
            gl = gamma_L_exact(g)[0]
            assert len(min_dominating_exact(g)) <= gl
            ml = min_locating_set_exact(g)[0]
            assert ml <= gl <= ml + 1


def test_solver_witnesses_always_verify():
    rng = random.Random(31)
    for _ in range(60):
        g = random_graph_without_isolated(rng.randint(1, 9), rng)
        _, w = gamma_L_exact(g)
        assert is_locating_dominating(g, w)
        _, wl = min_locating_set_exact(g)
        assert is_locating_set(g, wl)
        d = min_dominating_exact(g)
        assert is_dominating(g, d)
