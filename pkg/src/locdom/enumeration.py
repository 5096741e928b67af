"""Isomorph-free enumeration of small graphs, plus seeded family samplers.

Connected graphs on n vertices are built by extending every connected graph
on n-1 vertices with one new vertex over all nonempty neighborhoods, then
deduplicating up to isomorphism (every connected graph has a non-cut vertex,
so the augmentation is exhaustive).  Trees are grown leaf by leaf.
Deduplication groups candidates by a refinement-based invariant and settles
collisions with an explicit isomorphism search, which is fast at the n <= 8
scale this package targets.  Counts are cross-checked against brute force
and a reference atlas in the test suite.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, Optional

from .graphs import Graph, is_twin_free, iter_bits


# -- invariants and isomorphism --------------------------------------------------

def _refined_colors(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    """Per-vertex colors from iterated neighborhood refinement.

    Seeded with (degree, triangle count) and re-ranked canonically each
    round, so isomorphic graphs get identical color multisets.
    """
    if n == 0:
        return ()
    nbrs = [list(iter_bits(adj[v])) for v in range(n)]
    raw: list = []
    for v in range(n):
        row = adj[v]
        t = 0
        for u in nbrs[v]:
            t += (row & adj[u]).bit_count()
        raw.append((len(nbrs[v]), t))
    ranks = {c: i for i, c in enumerate(sorted(set(raw)))}
    colors = [ranks[c] for c in raw]
    distinct = len(ranks)
    while distinct < n:
        raw = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)]
        ranks = {c: i for i, c in enumerate(sorted(set(raw)))}
        new_colors = [ranks[c] for c in raw]
        if len(ranks) == distinct:
            colors = new_colors
            break
        distinct = len(ranks)
        colors = new_colors
    return tuple(colors)


def _invariant(g: Graph, colors: tuple[int, ...]) -> tuple:
    return (g.n, g.num_edges, tuple(sorted(colors)))


def _isomorphic_colored(g: Graph, cg: tuple[int, ...], h: Graph, ch: tuple[int, ...]) -> bool:
    n = g.n
    by_color: dict[int, list[int]] = {}
    for u in range(n):
        by_color.setdefault(ch[u], []).append(u)
    # map rarest colors first, preferring vertices attached to the mapped part
    order = sorted(range(n), key=lambda v: (len(by_color[cg[v]]), cg[v], -g.adj[v].bit_count()))
    mapping = [-1] * n
    used = [False] * n
    g_adj = g.adj
    h_adj = h.adj

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        row_v = g_adj[v]
        for u in by_color[cg[v]]:
            if used[u]:
                continue
            row_u = h_adj[u]
            ok = True
            for j in range(i):
                w = order[j]
                if (row_v >> w & 1) != (row_u >> mapping[w] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = u
                used[u] = True
                if extend(i + 1):
                    return True
                used[u] = False
                mapping[v] = -1
        return False

    return extend(0)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism by color-guided backtracking; exact at small orders."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    cg = _refined_colors(g.n, g.adj)
    ch = _refined_colors(h.n, h.adj)
    if sorted(cg) != sorted(ch):
        return False
    return _isomorphic_colored(g, cg, h, ch)


class _IsoClasses:
    """Accumulates one representative per isomorphism class."""

    def __init__(self) -> None:
        self._buckets: dict[tuple, list[tuple[Graph, tuple[int, ...]]]] = {}

    def add(self, g: Graph) -> bool:
        colors = _refined_colors(g.n, g.adj)
        bucket = self._buckets.setdefault(_invariant(g, colors), [])
        for rep, rep_colors in bucket:
            if _isomorphic_colored(g, colors, rep, rep_colors):
                return False
        bucket.append((g, colors))
        return True

    def graphs(self) -> list[Graph]:
        return [g for bucket in self._buckets.values() for g, _ in bucket]


def _extend(g: Graph, neighborhood: int) -> Graph:
    rows = list(g.adj)
    new = g.n
    rows.append(neighborhood)
    for v in iter_bits(neighborhood):
        rows[v] |= 1 << new
    return Graph._trusted(g.n + 1, tuple(rows))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices, one per isomorphism class."""
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    classes = _IsoClasses()
    for g in connected_graphs(n - 1):
        for neighborhood in range(1, 1 << (n - 1)):
            classes.add(_extend(g, neighborhood))
    return tuple(classes.graphs())


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """All trees on n vertices, one per isomorphism class (leaf augmentation)."""
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    classes = _IsoClasses()
    for t in trees(n - 1):
        for v in range(n - 1):
            classes.add(_extend(t, 1 << v))
    return tuple(classes.graphs())


def connected_twin_free_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in connected_graphs(n) if is_twin_free(g))


def twin_free_graphs_without_isolated(max_n: int) -> Iterator[Graph]:
    """All twin-free graphs without isolated vertices up to order ``max_n``.

    A disconnected graph without isolated vertices is twin-free exactly when
    each component is (cross-component neighborhoods can never coincide), so
    the disconnected classes are disjoint unions of smaller connected
    twin-free pieces of order >= 2, enumerated as multisets.
    """
    from .graphs import disjoint_union

    by_order = {k: connected_twin_free_graphs(k) for k in range(2, max_n + 1)}

    def unions(budget: int, min_order: int, parts: list[Graph]) -> Iterator[list[Graph]]:
        if parts:
            yield parts
        for k in range(min_order, budget + 1):
            pool = by_order.get(k, ())
            start_idx = 0
            if parts and parts[-1].n == k:
                start_idx = pool.index(parts[-1])
            for idx in range(start_idx, len(pool)):
                yield from unions(budget - k, k, parts + [pool[idx]])

    for combo in unions(max_n, 2, []):
        yield combo[0] if len(combo) == 1 else disjoint_union(combo)


# -- seeded random families -------------------------------------------------------

def random_graph(n: int, rng: random.Random, density: float = 0.5) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def random_graph_without_isolated(n: int, rng: random.Random, density: float = 0.5) -> Graph:
    while True:
        g = random_graph(n, rng, density)
        if n == 0 or not g.isolated_vertices():
            return g


_MAX_SAMPLING_ATTEMPTS = 10_000


def random_twin_free_split_graph(n: int, rng: random.Random) -> Graph:
    """Rejection sampling: random clique size and cross edges until twin-free
    with no isolated vertices.  Needs n >= 4."""
    if n < 4:
        raise ValueError("no twin-free split graphs without isolated vertices below order 4")
    for _ in range(_MAX_SAMPLING_ATTEMPTS):
        k = rng.randint(2, n - 2)
        density = rng.uniform(0.2, 0.8)
        rows = [0] * n
        for u in range(k):
            for v in range(u + 1, k):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        for u in range(k):
            for v in range(k, n):
                if rng.random() < density:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
        g = Graph(n, tuple(rows))
        if not g.isolated_vertices() and is_twin_free(g):
            return g
    raise RuntimeError(f"could not sample a twin-free split graph of order {n}")


def random_twin_free_cobipartite_graph(n: int, rng: random.Random) -> Graph:
    """Rejection sampling over two cliques with random cross edges; n >= 4."""
    if n < 4:
        raise ValueError("no twin-free co-bipartite graphs below order 4")
    for _ in range(_MAX_SAMPLING_ATTEMPTS):
        a = rng.randint(2, n - 2)
        density = rng.uniform(0.2, 0.8)
        rows = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                same_side = (u < a) == (v < a)
                if same_side or rng.random() < density:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
        g = Graph(n, tuple(rows))
        if not g.isolated_vertices() and is_twin_free(g):
            return g
    raise RuntimeError(f"could not sample a twin-free co-bipartite graph of order {n}")


def random_connected_graph(n: int, rng: random.Random, density: float = 0.5) -> Graph:
    from .graphs import is_connected

    while True:
        g = random_graph(n, rng, density)
        if is_connected(g):
            return g


def random_assembly(rng: random.Random, max_order: int = 14):
    """A random attach_link assembly from the built-in gadgets over a random
    isolated-vertex-free host, total order <= max_order.  Returns the spec."""
    from .extremal import AttachSpec, attachable_edge, attachable_star

    while True:
        host_n = rng.randint(2, max(2, max_order // 2))
        host = random_graph(host_n, rng, density=rng.uniform(0.3, 0.9))
        if host.isolated_vertices():
            continue
        gadgets = []
        total = 0
        ok = True
        for _ in range(host_n):
            remaining = max_order - total - 2 * (host_n - len(gadgets) - 1)
            choices: list[tuple[Graph, int]] = [attachable_edge()]
            if remaining >= 4:
                choices.append(attachable_star(1))
            if remaining >= 6:
                choices.append(attachable_star(2))
            gadget = rng.choice(choices)
            gadgets.append(gadget)
            total += gadget[0].n
            if total > max_order:
                ok = False
                break
        if ok and total <= max_order:
            return AttachSpec(host=host, gadgets=tuple(gadgets))
