"""Constructive upper bounds on the location-domination number.

All four constructions require a twin-free graph without isolated vertices
and return sets that are verified locating-dominating before they leave this
module; a verification failure is a bug, not an input problem, and raises
RuntimeError.

* ``construct_ld_two_thirds``: grows a private-neighbor minimum dominating
  set while the signature-partition part count keeps pace with the set size,
  then takes the better of two candidate completions.  The result never
  exceeds 2n/3.
* ``ld_from_vertex_cover``: any vertex cover of a twin-free graph locates
  and dominates, so the minimum cover is a certificate.
* ``construct_ld_split`` / ``construct_ld_cobipartite``: case analyses over
  a clique/independent or clique/clique partition, never exceeding n/2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, classify, find_twins, iter_bits, mask_members, vertex_mask
from .locating import (
    LDCertificate,
    PartitionSignature,
    _is_locdom_mask,
    _part_count,
    _signature_groups,
    bc_private_dominating_set,
    certify,
    min_vertex_cover_exact,
    partition_signature,
)


def _require_twin_free_no_isolated(g: Graph, what: str) -> None:
    isolated = g.isolated_vertices()
    if isolated:
        raise ValueError(f"{what} requires no isolated vertices; found {sorted(isolated)}")
    twins = find_twins(g)
    if twins:
        u, v, kind = twins[0]
        raise ValueError(f"{what} requires a twin-free graph; {u} and {v} are {kind} twins")


@dataclass(frozen=True)
class TwoThirdsTrace:
    """Full trace of the 2n/3 construction.

    ``candidate_a`` adds every singleton-part vertex to the augmented set;
    ``candidate_b`` keeps everything except the singleton-part vertices and
    one deleted representative per larger part.  ``chosen`` is the smaller
    of the two (ties go to candidate_b).
    """

    s0: frozenset[int]
    d: frozenset[int]
    sig: PartitionSignature
    candidate_a: frozenset[int]
    candidate_b: frozenset[int]
    chosen: frozenset[int]


def construct_ld_two_thirds(g: Graph) -> TwoThirdsTrace:
    _require_twin_free_no_isolated(g, "two-thirds construction")
    s0_mask = vertex_mask(bc_private_dominating_set(g), g.n)

    # grow while some outside vertex keeps the part count at least one ahead
    # of the current size; scan in ascending index and restart after every
    # addition so the grown set is deterministic
    d = s0_mask
    size = d.bit_count()
    grown = True
    while grown:
        grown = False
        outside = g.full_mask & ~d
        for w in iter_bits(outside):
            if _part_count(g, d | (1 << w)) >= size + 1:
                d |= 1 << w
                size += 1
                grown = True
                break

    groups = _signature_groups(g, d)
    singles = 0
    deleted = 0
    for members in groups.values():
        if members.bit_count() == 1:
            singles |= members
        else:
            deleted |= members & -members  # drop the smallest index of each part
    candidate_a = d | singles
    candidate_b = (g.full_mask & ~singles) & ~deleted
    chosen = candidate_a if candidate_a.bit_count() < candidate_b.bit_count() else candidate_b

    if not _is_locdom_mask(g, chosen):
        raise RuntimeError("two-thirds construction produced a non-LD set (bug trap)")
    if 3 * chosen.bit_count() > 2 * g.n:
        raise RuntimeError("two-thirds construction exceeded 2n/3 (bug trap)")
    return TwoThirdsTrace(
        s0=mask_members(s0_mask),
        d=mask_members(d),
        sig=partition_signature(g, d),
        candidate_a=mask_members(candidate_a),
        candidate_b=mask_members(candidate_b),
        chosen=mask_members(chosen),
    )


def ld_from_vertex_cover(g: Graph) -> LDCertificate:
    """Minimum vertex cover, certified as a locating-dominating set."""
    _require_twin_free_no_isolated(g, "vertex-cover construction")
    cert = certify(g, min_vertex_cover_exact(g), method="vertex_cover")
    if not cert.is_locating_dominating:
        raise RuntimeError("vertex cover failed LD verification on a twin-free graph (bug trap)")
    return cert


def _finish(g: Graph, mask: int, method: str) -> LDCertificate:
    cert = certify(g, mask, method=method)
    if not cert.is_locating_dominating:
        raise RuntimeError(f"{method} construction produced a non-LD set (bug trap)")
    if 2 * cert.size > g.n:
        raise RuntimeError(f"{method} construction exceeded n/2 (bug trap)")
    return cert


def construct_ld_split(g: Graph) -> LDCertificate:
    """Case analysis over a clique X / independent set Y partition."""
    _require_twin_free_no_isolated(g, "split construction")
    parts = classify(g).split_partition
    if parts is None:
        raise ValueError("split construction requires a split graph")
    x, y = parts  # clique, independent set

    if 2 * y.bit_count() >= g.n:
        return _finish(g, x, "split")
    if all(g.adj[u] & y for u in iter_bits(x)):
        return _finish(g, y, "split")
    lonely = [u for u in iter_bits(x) if not g.adj[u] & y]
    if len(lonely) != 1:
        raise RuntimeError("multiple clique vertices without independent-side neighbors "
                           "would be closed twins (bug trap)")
    lx = 1 << lonely[0]
    if x.bit_count() - y.bit_count() >= 2:
        return _finish(g, y | lx, "split")
    covering_y = [w for w in iter_bits(y) if (x & ~lx) & ~g.adj[w] == 0]
    if not covering_y:
        return _finish(g, x & ~lx, "split")
    # unreachable for twin-free inputs: such a y would be an open twin of the
    # lonely clique vertex; kept to mirror the case analysis faithfully
    return _finish(g, (y & ~(1 << covering_y[0])) | lx, "split")


def construct_ld_cobipartite(g: Graph) -> LDCertificate:
    """Case analysis over two cliques X, Y with |X| <= |Y|."""
    _require_twin_free_no_isolated(g, "co-bipartite construction")
    parts = classify(g).cobip_partition
    if parts is None:
        raise ValueError("co-bipartite construction requires a co-bipartite graph")
    x, y = parts
    if x.bit_count() > y.bit_count():
        x, y = y, x

    unserved_y = [w for w in iter_bits(y) if not g.adj[w] & x]
    if not unserved_y:
        return _finish(g, x, "cobipartite")
    if len(unserved_y) != 1:
        raise RuntimeError("two clique vertices missing all cross edges would be "
                           "closed twins (bug trap)")
    ly = 1 << unserved_y[0]
    unserved_x = [u for u in iter_bits(x) if not g.adj[u] & y]
    if unserved_x:
        if len(unserved_x) != 1:
            raise RuntimeError("two clique vertices missing all cross edges would be "
                               "closed twins (bug trap)")
        return _finish(g, (x & ~(1 << unserved_x[0])) | ly, "cobipartite")
    if y.bit_count() - x.bit_count() >= 2:
        return _finish(g, x | ly, "cobipartite")
    covering_x = [u for u in iter_bits(x) if (y & ~ly) & ~g.adj[u] == 0]
    if not covering_x:
        return _finish(g, y & ~ly, "cobipartite")
    return _finish(g, (x & ~(1 << covering_x[0])) | ly, "cobipartite")
