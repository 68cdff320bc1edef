"""Digraph constructions, exact dicoloring, and hero recognizers for
oriented complete multipartite graphs, at desk scale."""

from .core import (
    Dicoloring,
    Digraph,
    GraphColoring,
    GuardExceeded,
    MultipartiteStructure,
    OrderedGraph,
    UndirectedGraph,
    check_multipartite_structure,
    is_tournament,
    validate_coloring,
    validate_dicoloring,
)
from .constructions import (
    build_triple_digraph,
    c3,
    compose_arrow,
    delta,
    delta_tt,
    disjoint_union,
    forward_arcs,
    grid_digraph,
    line_graph,
    rotational_tournament,
    separated_grid_digraph,
    substitute,
    tt,
)
from .detection import (
    ClusterWitness,
    check_flat_delta_order,
    check_subtournament_fas,
    classify_arc,
    fas_disjoint_paths,
    find_induced,
    find_induced_all,
    find_jewel_chain,
    find_t_cluster,
    flat_check,
    is_complete_multipartite,
    is_quasi_transitive,
    non_interlaced_check,
)
from .coloring import (
    LayeredInstance,
    check_layered_section_bounds,
    chromatic_number,
    coloring_from_line_coloring,
    dichromatic_number,
    dicolorable,
    extract_graph_coloring,
    layered_dicoloring,
    qt_color,
)
from .hero import (
    ArrowNode,
    DeltaNode,
    HeroVerdict,
    LeafDelta22,
    LeafK1,
    bound_K,
    bound_f,
    bound_phi,
    canonical_form,
    derivation_sexpr,
    evaluate_derivation,
    hero_in_multipartite,
    hero_in_tournaments,
)
from .io import parse_digraph, parse_undirected, serialize_digraph, serialize_undirected
from .verify import CHECKS, VerificationReport, run_check

__all__ = [name for name in dir() if not name.startswith("_")]
