"""Locating-dominating sets in twin-free graphs.

Exact solvers and verifiers for domination-type parameters, constructive
upper bounds (2n/3 in general, n/2 for split and co-bipartite graphs),
generators for the extremal families that reach half the order, a recognizer
for the extremal trees, graph6 tooling, and a scan harness for checking the
half-order conjecture on enumerated small graphs.
"""

from .graphs import (
    Graph,
    GraphClass,
    classify,
    complement,
    complete_join,
    corona,
    cycle_graph,
    complete_graph,
    disjoint_union,
    empty_graph,
    find_twins,
    is_connected,
    is_twin_free,
    mask_members,
    path_graph,
    star_graph,
    vertex_mask,
)
from .graph6 import Graph6Error, from_graph6, to_graph6
from .locating import (
    LDCertificate,
    PartitionSignature,
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
from .bounds import (
    TwoThirdsTrace,
    construct_ld_cobipartite,
    construct_ld_split,
    construct_ld_two_thirds,
    ld_from_vertex_cover,
)
from .extremal import (
    AttachSpec,
    TreeCertificate,
    attach_link,
    attachable_edge,
    attachable_star,
    demo_assembly,
    join_of_path_powers,
    path_power_graph,
    path_power_witness,
    random_extremal_tree,
    tree_family_certificate,
    tree_perfect_matching,
    two_hub_graph,
    validate_tree_certificate,
)

__version__ = "0.1.0"
