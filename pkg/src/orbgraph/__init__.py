"""Orbital graphs of finite permutation groups: construction, base-pair
enumeration, three-way futility testing, and signature refinement."""

from .futility import (
    METHODS,
    SHAPE_BIPARTITE,
    SHAPE_COMPLETE,
    SHAPE_NONE,
    ArcCountBounds,
    FutilityVerdict,
    arc_count_bounds,
    find_arc_violation,
    futility_by_stabilizer_transitivity,
    is_futile_fast,
    is_futile_oracle,
    is_futile_structural,
    transitive_group_futility,
    verdict_record,
)
from .orbital import (
    OrbitalGraph,
    arc_count_formula,
    arc_mapping_element,
    build_orbital_graph,
    check_base_pair,
    components_pairwise_isomorphic,
    distinct_base_pairs,
    enumerate_base_pairs,
    graph_from_json,
    graph_to_json,
    graphs_equal,
    is_self_paired,
    isolated_vertices,
    to_dot,
    weak_components,
)
from .perm import (
    OrderedPartition,
    PermGroup,
    Permutation,
    load_group,
    parse_cycles,
    parse_group_text,
    partition_stabilizer_generators,
)
from .refine import RefinementTrace, refine_by_graph, select_useful_graphs, trace_record

__version__ = "0.1.0"
