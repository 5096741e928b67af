import pathlib

import pytest

from locdom.enumeration import connected_graphs
from locdom.graph6 import read_graph6_file
from locdom.graphs import disjoint_union, is_twin_free, path_graph

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

# connected graphs on 8 vertices: regenerating them takes over a minute, so the
# suite ships them as a graph6 fixture (regenerate with: locdom enum 8 --out ...)
CONNECTED_8_FILE = FIXTURES / "connected_8.g6"

# counts of connected graphs per order (OEIS A001349), used to validate both
# the live enumeration and the shipped fixture
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


@pytest.fixture(scope="session")
def connected_by_order() -> dict:
    """All connected graphs up to order 8, one per isomorphism class."""
    graphs = {n: list(connected_graphs(n)) for n in range(1, 8)}
    graphs[8] = read_graph6_file(str(CONNECTED_8_FILE))
    for n, expected in CONNECTED_COUNTS.items():
        assert len(graphs[n]) == expected, f"order {n}: {len(graphs[n])} != {expected}"
    return graphs


@pytest.fixture(scope="session")
def twin_free_family(connected_by_order) -> list:
    """Every twin-free graph without isolated vertices, order <= 8.

    Components of such a graph are themselves twin-free and of order >= 2
    (vertices in different components can never share a neighborhood), and
    the only component orders admitting twin-free connected graphs below 5
    are 4+, so the disconnected classes at order <= 8 are exactly the pairs
    of twin-free 4-vertex graphs.
    """
    singles = [
        g
        for n in range(2, 9)
        for g in connected_by_order[n]
        if is_twin_free(g)
    ]
    tf4 = [g for g in connected_by_order[4] if is_twin_free(g)]
    pairs = [
        disjoint_union([tf4[i], tf4[j]])
        for i in range(len(tf4))
        for j in range(i, len(tf4))
    ]
    return singles + pairs


@pytest.fixture(scope="session")
def twin_free_connected_up_to_8(connected_by_order) -> list:
    return [
        g
        for n in range(2, 9)
        for g in connected_by_order[n]
        if is_twin_free(g)
    ]


@pytest.fixture()
def p4():
    return path_graph(4)
