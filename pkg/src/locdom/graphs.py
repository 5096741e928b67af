"""Immutable simple graphs on vertices 0..n-1 with bitmask adjacency.

Every vertex subset in this package has two interchangeable shapes: a Python
set/iterable of vertex indices at the API surface, and an int bitmask (bit v
set <=> vertex v in the set) inside the solvers.  ``vertex_mask`` and
``mask_members`` convert between the two.  Graphs are frozen after
construction, so they can be shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional


def vertex_mask(vertices: Iterable[int] | int, n: int) -> int:
    """Normalize a vertex collection (or a ready-made bitmask) to a bitmask.

    Raises ValueError if any vertex falls outside 0..n-1.
    """
    if isinstance(vertices, int):
        mask = vertices
        if mask < 0 or mask >> n:
            raise ValueError(f"vertex set {bin(mask)} mentions vertices outside 0..{n - 1}")
        return mask
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} outside 0..{n - 1}")
        mask |= 1 << v
    return mask


def mask_members(mask: int) -> frozenset[int]:
    """The vertices of a bitmask, as a frozenset."""
    return frozenset(iter_bits(mask))


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def next_same_popcount(mask: int) -> int:
    """Smallest integer above ``mask`` with the same number of set bits.

    Gosper's hack; used to enumerate k-subsets in increasing bitmask order,
    which is how every solver realizes the lexicographically-smallest-witness
    tie-break.
    """
    low = mask & -mask
    ripple = mask + low
    return (((mask ^ ripple) >> 2) // low) | ripple


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``adj[v]`` is the open neighborhood N(v) as a bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency of {v} mentions vertices >= {self.n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Skip invariant validation; callers must supply consistent adjacency.

        Only for hot loops that build graphs from already-valid graphs."""
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return mask_members(self.adj[v])

    def closed_neighborhood(self, v: int) -> int:
        """N[v] as a bitmask."""
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            for u in iter_bits(row):
                yield (v, u)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def isolated_vertices(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if not self.adj[v])


# -- small named graphs used all over the tests and docs ----------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star K_{1,leaves} with the center at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


# -- structural queries --------------------------------------------------------

def is_connected(g: Graph) -> bool:
    """Connectivity by bitmask BFS; the empty graph counts as connected."""
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def find_twins(g: Graph) -> list[tuple[int, int, str]]:
    """All twin pairs (u, v, kind) with u < v and kind in {"open", "closed"}.

    Open twins share N(u) = N(v); closed twins share N[u] = N[v].  The two
    kinds are mutually exclusive for a given pair, and the empty list is
    returned exactly when the graph is twin-free.
    """
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] == g.adj[v]:
                out.append((u, v, "open"))
            elif g.adj[u] | (1 << u) == g.adj[v] | (1 << v):
                out.append((u, v, "closed"))
    return out


def is_twin_free(g: Graph) -> bool:
    for u in range(g.n):
        row_u = g.adj[u]
        closed_u = row_u | (1 << u)
        for v in range(u + 1, g.n):
            if row_u == g.adj[v] or closed_u == (g.adj[v] | (1 << v)):
                return False
    return True


def is_clique(g: Graph, vertices: Iterable[int] | int) -> bool:
    mask = vertex_mask(vertices, g.n)
    return all(mask & ~g.closed_neighborhood(v) == 0 for v in iter_bits(mask))


def is_independent_set(g: Graph, vertices: Iterable[int] | int) -> bool:
    mask = vertex_mask(vertices, g.n)
    return all(g.adj[v] & mask == 0 for v in iter_bits(mask))


def _two_color(adj: tuple[int, ...], n: int) -> Optional[tuple[int, int]]:
    """2-coloring by BFS in deterministic vertex order; None if an odd cycle exists."""
    color = [-1] * n
    for start in range(n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop(0)
            for u in iter_bits(adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side0 = 0
    side1 = 0
    for v, c in enumerate(color):
        if c == 1:
            side1 |= 1 << v
        else:
            side0 |= 1 << v
    return side0, side1


def is_bipartite(g: Graph) -> bool:
    return _two_color(g.adj, g.n) is not None


@dataclass(frozen=True)
class GraphClass:
    """Recognition flags plus certifying partitions (bitmask pairs)."""

    is_tree: bool
    is_bipartite: bool
    is_split: bool
    is_cobipartite: bool
    split_partition: Optional[tuple[int, int]] = None  # (clique, independent set)
    cobip_partition: Optional[tuple[int, int]] = None  # (clique, clique)


def _split_partition(g: Graph) -> Optional[tuple[int, int]]:
    """Split partition via the Hammer-Simeone degree-sequence test.

    Vertices are ordered by (degree desc, index asc); with m the largest i
    such that d_i >= i-1, the graph is split iff
    sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and then the first m vertices
    form the clique.  The recovered partition is verified before returning;
    failure would contradict the characterization and raises.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = 0
    for i in range(1, g.n + 1):
        if degs[i - 1] >= i - 1:
            m = i
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None
    clique = vertex_mask(order[:m], g.n)
    independent = g.full_mask & ~clique
    if not is_clique(g, clique) or not is_independent_set(g, independent):
        raise RuntimeError("degree-threshold split partition failed verification (bug trap)")
    return clique, independent


def classify(g: Graph) -> GraphClass:
    two_col = _two_color(g.adj, g.n)
    bip = two_col is not None
    tree = g.n >= 1 and is_connected(g) and g.num_edges == g.n - 1
    split = _split_partition(g)
    comp = complement(g)
    co_col = _two_color(comp.adj, comp.n)
    cobip = None
    if co_col is not None:
        cobip = co_col
        if not is_clique(g, cobip[0]) or not is_clique(g, cobip[1]):
            raise RuntimeError("complement 2-coloring is not a clique pair (bug trap)")
    return GraphClass(
        is_tree=tree,
        is_bipartite=bip,
        is_split=split is not None,
        is_cobipartite=cobip is not None,
        split_partition=split,
        cobip_partition=cobip,
    )


# -- graph compositions --------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple((full ^ row ^ (1 << v)) for v, row in enumerate(g.adj)))


def complete_join(gs: list[Graph]) -> Graph:
    """Disjoint union plus all cross edges; vertex blocks keep list order."""
    if not gs:
        raise ValueError("complete join of an empty list")
    n = sum(g.n for g in gs)
    full = (1 << n) - 1
    rows = []
    offset = 0
    for g in gs:
        block = ((1 << g.n) - 1) << offset
        for v in range(g.n):
            rows.append((g.adj[v] << offset) | (full & ~block))
        offset += g.n
    return Graph(n, tuple(rows))


def disjoint_union(gs: list[Graph]) -> Graph:
    n = sum(g.n for g in gs)
    rows = []
    offset = 0
    for g in gs:
        for v in range(g.n):
            rows.append(g.adj[v] << offset)
        offset += g.n
    return Graph(n, tuple(rows))


def corona(g: Graph) -> Graph:
    """Attach one private pendant leaf to every vertex; leaf of v is n+v."""
    n = g.n
    rows = [g.adj[v] | (1 << (n + v)) for v in range(n)]
    rows.extend(1 << v for v in range(n))
    return Graph(2 * n, tuple(rows))
