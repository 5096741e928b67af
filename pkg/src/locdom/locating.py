"""Verifiers and exact solvers for domination-type parameters.

A set D is dominating if every vertex outside D has a neighbor in D, and
locating-dominating if additionally the signatures N(v) & D of the outside
vertices are pairwise distinct (hence nonempty).  A locating set only needs
pairwise-distinct signatures, which lets at most one outside vertex go
undominated.

The exact solvers enumerate candidate sets in increasing cardinality and,
within one cardinality, in increasing bitmask value (Gosper's hack), so the
returned witness is always the lexicographically smallest one as a bitmask
integer.  Cardinality levels that cannot work are skipped up front: a
locating-dominating set of size k supports at most 2^k - 1 distinct nonempty
signatures, so levels with 2^k - 1 < n - k are infeasible.  This is exact
and comfortably fast up to n around 16-18.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graphs import (
    Graph,
    iter_bits,
    mask_members,
    next_same_popcount,
    vertex_mask,
)


# -- verifiers -----------------------------------------------------------------

def _is_dominating_mask(g: Graph, d: int) -> bool:
    for v in range(g.n):
        if not (d >> v & 1) and not (g.adj[v] & d):
            return False
    return True


def _is_locating_mask(g: Graph, s: int) -> bool:
    seen = set()
    for v in range(g.n):
        if s >> v & 1:
            continue
        sig = g.adj[v] & s
        if sig in seen:
            return False
        seen.add(sig)
    return True


def _is_locdom_mask(g: Graph, d: int) -> bool:
    seen = set()
    for v in range(g.n):
        if d >> v & 1:
            continue
        sig = g.adj[v] & d
        if not sig or sig in seen:
            return False
        seen.add(sig)
    return True


def is_dominating(g: Graph, d: Iterable[int] | int) -> bool:
    """True iff every vertex outside ``d`` has a neighbor in ``d``."""
    return _is_dominating_mask(g, vertex_mask(d, g.n))


def is_locating_set(g: Graph, s: Iterable[int] | int) -> bool:
    """True iff all vertices outside ``s`` have pairwise-distinct signatures.

    Signatures may be empty for at most one vertex; pairwise distinctness
    enforces that automatically.
    """
    return _is_locating_mask(g, vertex_mask(s, g.n))


def is_locating_dominating(g: Graph, d: Iterable[int] | int) -> bool:
    """True iff ``d`` is dominating and locates every pair outside it."""
    return _is_locdom_mask(g, vertex_mask(d, g.n))


# -- signature partition -------------------------------------------------------

@dataclass(frozen=True)
class PartitionSignature:
    """Partition of V minus base_set by signature N(v) & base_set.

    ``parts`` is ordered by minimum member; ``singletons`` collects the
    vertices lying in parts of size 1 and ``grouped`` the rest, so
    ``num_singletons + num_grouped_parts == num_parts``.
    """

    base_set: frozenset[int]
    parts: tuple[tuple[frozenset[int], frozenset[int]], ...]  # (signature, members)
    singletons: frozenset[int]
    grouped: frozenset[int]
    num_parts: int
    num_singletons: int
    num_grouped_parts: int


def _signature_groups(g: Graph, s: int) -> dict[int, int]:
    """Map signature mask -> member mask over the vertices outside ``s``."""
    groups: dict[int, int] = {}
    for v in range(g.n):
        if s >> v & 1:
            continue
        sig = g.adj[v] & s
        groups[sig] = groups.get(sig, 0) | (1 << v)
    return groups


def _part_count(g: Graph, s: int) -> int:
    sigs = set()
    for v in range(g.n):
        if not (s >> v & 1):
            sigs.add(g.adj[v] & s)
    return len(sigs)


def partition_signature(g: Graph, s: Iterable[int] | int) -> PartitionSignature:
    s_mask = vertex_mask(s, g.n)
    groups = _signature_groups(g, s_mask)
    ordered = sorted(groups.items(), key=lambda kv: kv[1] & -kv[1])
    singles = 0
    grouped = 0
    for _, members in ordered:
        if members.bit_count() == 1:
            singles |= members
        else:
            grouped |= members
    n1 = singles.bit_count()
    return PartitionSignature(
        base_set=mask_members(s_mask),
        parts=tuple((mask_members(sig), mask_members(members)) for sig, members in ordered),
        singletons=mask_members(singles),
        grouped=mask_members(grouped),
        num_parts=len(ordered),
        num_singletons=n1,
        num_grouped_parts=len(ordered) - n1,
    )


# -- exact solvers -------------------------------------------------------------

def _iter_masks_of_size(n: int, k: int):
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        mask = next_same_popcount(mask)


def _greedy_dominating_mask(g: Graph) -> int:
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    covered = 0
    chosen = 0
    full = g.full_mask
    while covered != full:
        best, best_gain = -1, -1
        for v in range(g.n):
            gain = (closed[v] & ~covered).bit_count()
            if gain > best_gain:
                best, best_gain = v, gain
        chosen |= 1 << best
        covered |= closed[best]
    return chosen


def _min_dominating_mask(g: Graph) -> int:
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    full = g.full_mask
    if full == 0:
        return 0
    greedy = _greedy_dominating_mask(g)
    upper = greedy.bit_count()
    for k in range(1, upper):
        for mask in _iter_masks_of_size(g.n, k):
            covered = 0
            for v in iter_bits(mask):
                covered |= closed[v]
            if covered == full:
                return mask
    # nothing below the greedy size: the greedy set is optimal but possibly
    # not the lexicographically smallest one, so rescan its level
    for mask in _iter_masks_of_size(g.n, upper):
        covered = 0
        for v in iter_bits(mask):
            covered |= closed[v]
        if covered == full:
            return mask
    raise RuntimeError("unreachable: V itself dominates")


def min_dominating_exact(g: Graph) -> frozenset[int]:
    """A minimum dominating set (smallest bitmask among optima)."""
    return mask_members(_min_dominating_mask(g))


def _gamma_l_mask(g: Graph) -> tuple[int, int]:
    n = g.n
    for k in range(n + 1):
        if (1 << k) - 1 < n - k:
            continue
        for mask in _iter_masks_of_size(n, k):
            if _is_locdom_mask(g, mask):
                return k, mask
    raise RuntimeError("unreachable: V is always locating-dominating")


def gamma_L_exact(g: Graph) -> tuple[int, frozenset[int]]:
    """The location-domination number with a lexicographically least witness.

    Graphs with isolated vertices are handled too; every isolated vertex is
    simply forced into any dominating set, which the search discovers on its
    own.
    """
    k, mask = _gamma_l_mask(g)
    return k, mask_members(mask)


def _min_locating_mask(g: Graph) -> tuple[int, int]:
    n = g.n
    for k in range(n + 1):
        if (1 << k) < n - k:
            continue
        for mask in _iter_masks_of_size(n, k):
            if _is_locating_mask(g, mask):
                return k, mask
    raise RuntimeError("unreachable: V is always locating")


def min_locating_set_exact(g: Graph) -> tuple[int, frozenset[int]]:
    """Minimum size of a locating set, with one witness."""
    k, mask = _min_locating_mask(g)
    return k, mask_members(mask)


def _max_independent_size(g: Graph) -> int:
    adj = g.adj
    best = 0

    def expand(candidates: int, size: int) -> None:
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if not candidates:
            best = max(best, size)
            return
        # branch on a highest-degree candidate to shrink the subproblem fast
        pivot, pivot_deg = -1, -1
        rest = candidates
        for v in iter_bits(candidates):
            deg = (adj[v] & candidates).bit_count()
            if deg > pivot_deg:
                pivot, pivot_deg = v, deg
        expand(candidates & ~(adj[pivot] | (1 << pivot)), size + 1)
        expand(candidates & ~(1 << pivot), size)

    expand(g.full_mask, 0)
    return best


def _is_cover_mask(g: Graph, mask: int) -> bool:
    outside = g.full_mask & ~mask
    for v in iter_bits(outside):
        if g.adj[v] & outside:
            return False
    return True


def min_vertex_cover_exact(g: Graph) -> frozenset[int]:
    """A minimum vertex cover: complement of a maximum independent set."""
    size = g.n - _max_independent_size(g)
    for mask in _iter_masks_of_size(g.n, size):
        if _is_cover_mask(g, mask):
            return mask_members(mask)
    raise RuntimeError("unreachable: cover of computed optimum size must exist")


# -- private-neighbor dominating sets ------------------------------------------

def _has_private_neighbor_property(g: Graph, d: int) -> bool:
    """Every member of ``d`` has an external private neighbor."""
    privately_served = 0
    for w in range(g.n):
        if d >> w & 1:
            continue
        hits = g.adj[w] & d
        if hits.bit_count() == 1:
            privately_served |= hits
    return privately_served == d


_ENUMERATION_LIMIT = 18


def bc_private_dominating_set(g: Graph) -> frozenset[int]:
    """A minimum dominating set whose members all have external private neighbors.

    Existence is classical for graphs without isolated vertices.  Up to the
    enumeration limit the minimum dominating sets are scanned in bitmask
    order and the first one with the property is returned.  Beyond it, a
    member with no private neighbor and no neighbor inside the set is swapped
    for one of its outside neighbors (the classical exchange), capped at n
    swaps with enumeration as the fallback.
    """
    isolated = g.isolated_vertices()
    if isolated:
        raise ValueError(f"graph has isolated vertices {sorted(isolated)}")
    if g.n == 0:
        return frozenset()
    gamma = _min_dominating_mask(g).bit_count()
    if g.n <= _ENUMERATION_LIMIT:
        return mask_members(_bc_by_enumeration(g, gamma))
    mask = _bc_by_swaps(g, _min_dominating_mask(g))
    if mask is None:
        mask = _bc_by_enumeration(g, gamma)
    return mask_members(mask)


def _bc_by_enumeration(g: Graph, gamma: int) -> int:
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    full = g.full_mask
    for mask in _iter_masks_of_size(g.n, gamma):
        covered = 0
        for v in iter_bits(mask):
            covered |= closed[v]
        if covered == full and _has_private_neighbor_property(g, mask):
            return mask
    raise RuntimeError("no minimum dominating set has the private-neighbor property (bug trap)")


def _bc_by_swaps(g: Graph, d: int) -> Optional[int]:
    for _ in range(g.n):
        if _has_private_neighbor_property(g, d):
            return d
        swapped = False
        for v in iter_bits(d):
            if g.adj[v] & d:
                continue
            served = 0
            for w in range(g.n):
                if d >> w & 1:
                    continue
                hits = g.adj[w] & d
                if hits.bit_count() == 1:
                    served |= hits
            if served >> v & 1:
                continue
            outside_nbrs = g.adj[v] & ~d
            if outside_nbrs:
                w = (outside_nbrs & -outside_nbrs).bit_length() - 1
                d = (d & ~(1 << v)) | (1 << w)
                swapped = True
                break
        if not swapped:
            return d if _has_private_neighbor_property(g, d) else None
    return None


def is_combinable(g: Graph) -> bool:
    """True iff the minimum locating set is as large as gamma_L."""
    isolated = g.isolated_vertices()
    if isolated:
        raise ValueError(f"graph has isolated vertices {sorted(isolated)}")
    return _min_locating_mask(g)[0] == _gamma_l_mask(g)[0]


# -- certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class LDCertificate:
    """A vertex set with re-checkable verification flags and provenance."""

    set: frozenset[int]
    is_dominating: bool
    is_locating: bool
    is_locating_dominating: bool
    method: str  # exact | two_thirds | vertex_cover | split | cobipartite | manual

    @property
    def size(self) -> int:
        return len(self.set)


def certify(g: Graph, vertices: Iterable[int] | int, method: str) -> LDCertificate:
    mask = vertex_mask(vertices, g.n)
    return LDCertificate(
        set=mask_members(mask),
        is_dominating=_is_dominating_mask(g, mask),
        is_locating=_is_locating_mask(g, mask),
        is_locating_dominating=_is_locdom_mask(g, mask),
        method=method,
    )
