import random

import networkx as nx
import pytest

from locdom.enumeration import random_graph
from locdom.graph6 import Graph6Error, from_graph6, iter_graph6_lines, to_graph6
from locdom.graphs import Graph, complete_graph, empty_graph, path_graph


def nx_decode(record: str) -> Graph:
    """Reference decoder used as the format oracle."""
    g = nx.from_graph6_bytes(record.encode("ascii"))
    return Graph.from_edges(g.number_of_nodes(), g.edges())


def test_spec_records():
    assert from_graph6("A_") == complete_graph(2)
    assert from_graph6("?") == empty_graph(0)
    assert from_graph6("Bw") == complete_graph(3)
    assert to_graph6(complete_graph(2)) == "A_"
    assert to_graph6(empty_graph(0)) == "?"
    assert to_graph6(complete_graph(3)) == "Bw"


def test_agrees_with_reference_codec():
    rng = random.Random(42)
    for _ in range(400):
        g = random_graph(rng.randint(0, 20), rng, rng.choice([0.2, 0.5, 0.8]))
        record = to_graph6(g)
        assert nx_decode(record) == g
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        reference = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert record == reference


def test_roundtrip_random():
    rng = random.Random(1)
    for _ in range(300):
        g = random_graph(rng.randint(0, 40), rng, rng.choice([0.1, 0.5, 0.9]))
        assert from_graph6(to_graph6(g)) == g


def test_size_limit():
    with pytest.raises(ValueError):
        to_graph6(empty_graph(63))
    assert to_graph6(empty_graph(62))[0] == chr(63 + 62)


def test_decode_errors_name_offsets():
    with pytest.raises(Graph6Error) as err:
        from_graph6("")
    assert err.value.offset == 0
    with pytest.raises(Graph6Error) as err:
        from_graph6("~??")  # long form
    assert err.value.offset == 0
    with pytest.raises(Graph6Error) as err:
        from_graph6("\x1f")  # header below '?'
    assert err.value.offset == 0
    with pytest.raises(Graph6Error) as err:
        from_graph6("C")  # truncated: order 4 needs one edge byte
    assert "truncated" in str(err.value)
    with pytest.raises(Graph6Error) as err:
        from_graph6("A_?")  # trailing garbage
    assert err.value.offset == 2
    with pytest.raises(Graph6Error) as err:
        from_graph6("A" + chr(63 + 0b010000))  # padding bit set (only bit 0 is real)
    assert err.value.offset == 1
    with pytest.raises(Graph6Error) as err:
        from_graph6("B" + chr(20))  # edge byte out of range
    assert err.value.offset == 1


def test_iter_graph6_lines_skips_banners():
    lines = [">>graph6<<\n", "\n", "A_\n", "Bw\n"]
    assert list(iter_graph6_lines(lines)) == [(3, "A_"), (4, "Bw")]


def test_fixture_file_is_wellformed(connected_by_order):
    graphs = connected_by_order[8]
    assert len(graphs) == 11117
    seen = {g.adj for g in graphs}
    assert len(seen) == len(graphs)
    for g in graphs[::500]:
        assert g.n == 8
        assert from_graph6(to_graph6(g)) == g
