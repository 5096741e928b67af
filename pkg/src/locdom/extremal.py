"""Generators and recognizers for twin-free families that meet the n/2 bound.

Families covered, with their fixed vertex labelings:

* ``two_hub_graph(k)``: two hubs (0 and 1) joined by k internal paths
  0 - (2+i) - (k+2+i) - 1, plus pendants 2k+2 on hub 0 and 2k+3 on hub 1.
  Order 2k+4, domination number 2, location-domination number k+2.
* ``path_power_graph(k)``: vertices 0..2k-1, edges between indices less than
  k apart; the (k-1)-th power of a 2k-vertex path.  Co-bipartite, twin-free,
  location-domination number k.
* ``join_of_path_powers(ks)``: complete join of path powers; the
  location-domination number adds up, staying at half the order.
* attachable gadgets (``attachable_edge``, ``attachable_star``) and
  ``attach_link``, which identifies each host vertex with a gadget's link
  vertex.  With an isolated-vertex-free host the assembly is twin-free and
  any locating-dominating set takes at least half of every gadget.
* the extremal tree family: trees with a perfect matching and a black/white
  coloring such that white vertices are leaves, or have degree 2 and lean on
  a black neighbor that carries a white leaf.  ``tree_family_certificate``
  recognizes membership; ``random_extremal_tree`` grows random members.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, complete_join, is_connected, iter_bits


# -- dense and sparse extremal families -----------------------------------------

def two_hub_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError(f"two-hub family needs k >= 3, got {k}")
    edges = [(0, 2 * k + 2), (1, 2 * k + 3)]
    for i in range(k):
        edges += [(0, 2 + i), (2 + i, k + 2 + i), (k + 2 + i, 1)]
    return Graph.from_edges(2 * k + 4, edges)


def path_power_graph(k: int) -> Graph:
    if k < 2:
        raise ValueError(f"path-power family needs k >= 2, got {k}")
    n = 2 * k
    return Graph.from_edges(
        n, ((i, j) for i in range(n) for j in range(i + 1, min(i + k, n)))
    )


def path_power_witness(k: int) -> frozenset[int]:
    """The standard half-order locating-dominating set of ``path_power_graph(k)``."""
    return frozenset(range(k - 1)) | {2 * k - 1}


def join_of_path_powers(ks: list[int]) -> Graph:
    if not ks:
        raise ValueError("join of an empty family")
    return complete_join([path_power_graph(k) for k in ks])


# -- attachable gadgets ----------------------------------------------------------

@dataclass(frozen=True)
class AttachSpec:
    """A host graph plus one (gadget, link vertex) per host vertex."""

    host: Graph
    gadgets: tuple[tuple[Graph, int], ...]

    def __post_init__(self) -> None:
        if len(self.gadgets) != self.host.n:
            raise ValueError(
                f"need one gadget per host vertex: host has {self.host.n}, got {len(self.gadgets)}"
            )
        for idx, (gadget, link) in enumerate(self.gadgets):
            if not 0 <= link < gadget.n:
                raise ValueError(f"gadget {idx}: link vertex {link} outside 0..{gadget.n - 1}")


def attachable_edge() -> tuple[Graph, int]:
    """A single edge; either end works as the link, vertex 0 is used."""
    return Graph.from_edges(2, [(0, 1)]), 0


def attachable_star(p: int) -> tuple[Graph, int]:
    """Star with p edges, one subdivided twice and the rest once; link = center.

    Labels: center 0; twice-subdivided branch 0-1-2-3; branch i (2..p) is
    0-(2i)-(2i+1).  For p=1 this degenerates to a path on 4 vertices with
    the link at one end.
    """
    if p < 1:
        raise ValueError(f"star gadget needs p >= 1, got {p}")
    edges = [(0, 1), (1, 2), (2, 3)]
    for i in range(2, p + 1):
        edges += [(0, 2 * i), (2 * i, 2 * i + 1)]
    return Graph.from_edges(2 * p + 2, edges), 0


def attachable_star_half_set(p: int) -> frozenset[int]:
    """A size-(p+1) locating-dominating set of the star gadget that stays one
    when the center is wired into any host: the center, the middle of the
    long branch, and every mid-branch subdivision vertex."""
    return frozenset({0, 2} | {2 * i for i in range(2, p + 1)})


def attach_offsets(spec: AttachSpec) -> list[int]:
    """Block offset of each gadget in the assembled graph's labeling."""
    offsets = []
    total = 0
    for gadget, _ in spec.gadgets:
        offsets.append(total)
        total += gadget.n
    return offsets


def attach_link(spec: AttachSpec) -> Graph:
    """Disjoint union of the gadgets with host edges drawn between link vertices.

    Host vertex i becomes ``offset_i + link_i``.  Twin-freeness is guaranteed
    when the host has no isolated vertices; arbitrary gadget choices are
    accepted at the caller's risk.
    """
    offsets = attach_offsets(spec)
    n = offsets[-1] + spec.gadgets[-1][0].n if spec.gadgets else 0
    rows = [0] * n
    for (gadget, _), offset in zip(spec.gadgets, offsets):
        for v in range(gadget.n):
            rows[offset + v] = gadget.adj[v] << offset
    anchors = [offset + link for (_, link), offset in zip(spec.gadgets, offsets)]
    for u, v in spec.host.edges():
        rows[anchors[u]] |= 1 << anchors[v]
        rows[anchors[v]] |= 1 << anchors[u]
    return Graph(n, tuple(rows))


def demo_assembly() -> tuple[Graph, frozenset[int]]:
    """A 26-vertex assembly over a 5-vertex path host, with a verified
    half-order locating-dominating set built from the per-gadget picks."""
    from .graphs import path_graph

    host = path_graph(5)
    gadgets = (
        attachable_edge(),
        attachable_star(2),
        attachable_edge(),
        attachable_star(1),
        attachable_star(5),
    )
    picks = (
        frozenset({0}),
        attachable_star_half_set(2),
        frozenset({0}),
        attachable_star_half_set(1),
        attachable_star_half_set(5),
    )
    spec = AttachSpec(host=host, gadgets=gadgets)
    offsets = attach_offsets(spec)
    half_set = frozenset(
        offset + v for offset, pick in zip(offsets, picks) for v in pick
    )
    return attach_link(spec), half_set


# -- the extremal tree family ----------------------------------------------------

@dataclass(frozen=True)
class TreeCertificate:
    """Perfect matching plus a black/white coloring witnessing membership."""

    matching: tuple[tuple[int, int], ...]
    color: tuple[str, ...]  # "black" / "white" per vertex

    @property
    def black_set(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.color) if c == "black")

    @property
    def white_set(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.color) if c == "white")


def tree_perfect_matching(g: Graph) -> Optional[list[tuple[int, int]]]:
    """The unique perfect matching of a tree, by repeated leaf matching."""
    if g.n == 0:
        return []
    if g.n % 2:
        return None
    degree = [g.adj[v].bit_count() for v in range(g.n)]
    live = [True] * g.n
    neighbors = [g.adj[v] for v in range(g.n)]
    stack = [v for v in range(g.n) if degree[v] == 1]
    matching = []
    matched = 0
    while stack:
        u = stack.pop()
        if not live[u] or degree[u] != 1:
            continue
        v = (neighbors[u] & -neighbors[u]).bit_length() - 1
        matching.append((min(u, v), max(u, v)))
        matched += 2
        for w in (u, v):
            live[w] = False
        for w in iter_bits(neighbors[v] & ~(1 << u)):
            if live[w]:
                neighbors[w] &= ~(1 << v)
                degree[w] -= 1
                if degree[w] == 1:
                    stack.append(w)
                elif degree[w] == 0:
                    return None  # stranded vertex, no perfect matching
        neighbors[u] = neighbors[v] = 0
        degree[u] = degree[v] = 0
    if matched != g.n:
        return None
    return sorted(matching)


def _white_support_exists(g: Graph, w: int, black_partner_of_leafmate: dict[int, int],
                          color: list[Optional[str]]) -> bool:
    """Defined only for degree-2 whites: some neighbor is black and matched to a leaf."""
    for b in iter_bits(g.adj[w]):
        if b in black_partner_of_leafmate and color[b] == "black":
            return True
    return False


def tree_family_certificate(t: Graph) -> Optional[TreeCertificate]:
    """A matching-plus-coloring certificate, or None if the tree has none.

    The perfect matching of a tree is unique, so only the coloring is
    searched: one black/white orientation per matching edge, with vertices
    of degree >= 3 forced black and a final verification of the degree-2
    white condition.  The first certificate in the deterministic search
    order is returned.
    """
    if not (is_connected(t) and t.n >= 1 and t.num_edges == t.n - 1):
        raise ValueError("input is not a tree")
    matching = tree_perfect_matching(t)
    if matching is None:
        return None

    degree = [t.adj[v].bit_count() for v in range(t.n)]
    partner = {}
    for u, v in matching:
        partner[u] = v
        partner[v] = u
    # vertices matched to a leaf; only these can support a degree-2 white
    leaf_mates = {v: partner[v] for v in partner if degree[partner[v]] == 1}

    def white_ok_locally(w: int) -> bool:
        if degree[w] == 1:
            return True
        if degree[w] != 2:
            return False
        return any(b in leaf_mates for b in iter_bits(t.adj[w]))

    options: list[list[tuple[int, int]]] = []
    for u, v in matching:
        opts = [(w, b) for w, b in ((u, v), (v, u)) if white_ok_locally(w)]
        if not opts:
            return None
        options.append(opts)

    color: list[Optional[str]] = [None] * t.n

    def verify_full() -> bool:
        for w in range(t.n):
            if color[w] != "white" or degree[w] == 1:
                continue
            if not any(b in leaf_mates and color[b] == "black" for b in iter_bits(t.adj[w])):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(matching):
            return verify_full()
        for w, b in options[i]:
            color[w] = "white"
            color[b] = "black"
            if search(i + 1):
                return True
        color[matching[i][0]] = color[matching[i][1]] = None
        return False

    if not search(0):
        return None
    return TreeCertificate(matching=tuple(matching), color=tuple(color))  # type: ignore[arg-type]


def validate_tree_certificate(t: Graph, cert: TreeCertificate) -> bool:
    """Re-check a certificate from scratch against the defining rules."""
    seen = set()
    for u, v in cert.matching:
        if not t.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
        if {cert.color[u], cert.color[v]} != {"black", "white"}:
            return False
    if len(seen) != t.n:
        return False
    degree = [t.adj[v].bit_count() for v in range(t.n)]
    partner = {}
    for u, v in cert.matching:
        partner[u] = v
        partner[v] = u
    for w in range(t.n):
        if cert.color[w] != "white" or degree[w] == 1:
            continue
        if degree[w] != 2:
            return False
        if not any(
            cert.color[b] == "black" and degree[partner[b]] == 1 and cert.color[partner[b]] == "white"
            for b in iter_bits(t.adj[w])
        ):
            return False
    return True


def random_extremal_tree(size: int, seed: int) -> Graph:
    """A pseudo-random member of the extremal tree family of the given order.

    Growth rules that preserve the defining coloring: hang a new matched
    black-white pair off an existing black vertex, or hang a four-vertex
    chain (black, supported degree-2 white, black, white leaf).  No claim of
    uniform sampling.
    """
    if size < 2 or size % 2:
        raise ValueError(f"order must be even and >= 2, got {size}")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = [(0, 1)]
    blacks = [0]
    n = 2
    while n < size:
        b = rng.choice(blacks)
        if size - n >= 4 and rng.random() < 0.5:
            x1, x2, x3, x4 = n, n + 1, n + 2, n + 3
            edges += [(b, x1), (x1, x2), (x2, x3), (x3, x4)]
            blacks += [x1, x3]
            n += 4
        else:
            b2, w2 = n, n + 1
            edges += [(b, b2), (b2, w2)]
            blacks.append(b2)
            n += 2
    return Graph.from_edges(size, edges)
