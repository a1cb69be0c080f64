"""Lobe decompositions, symmetry kernels, transitivity checkers, and
construction of lobe-transitive graph truncations."""

from .builder import (BuildResult, BuildSpec, BuildSpecError, LimitReport,
                      ResourceCapError, build_truncation, classify_limit,
                      spec_equivalent, spec_to_json_dict, validate_spec,
                      verify_interior, verify_local_transitivity, with_depth)
from .catalog import CATALOG_NAMES, named_graph
from .decomposition import (DecompositionError, Lobe, LobeClasses,
                            LobeDecomposition, connectivity_class, decompose,
                            lobe_ball, lobe_classes)
from .graph import (Graph, GraphError, make_graph, parse_graph,
                    serialize_graph)
from .symmetry import (GeneratorSet, OrbitPartition, automorphism_generators,
                       canonical_certificate, find_isomorphism,
                       generator_set, group_order, lobe_stabilizer,
                       orbit_partition, restrict_to)
from .transitivity import (ClassificationReport, ExtensionError, OrbitCounts,
                           TauTable, TransitivityError, Verdict, classify,
                           classify_direct, extend_lobe_isomorphism,
                           is_arc_transitive_thm, is_edge_transitive_thm,
                           is_lobe_transitive_thm, is_vertex_transitive_thm,
                           k_arc_orbit_count, tau_table,
                           tree_edge_transitivity)

__version__ = "0.1.0"

__all__ = [
    "BuildResult", "BuildSpec", "BuildSpecError", "CATALOG_NAMES",
    "ClassificationReport", "DecompositionError", "ExtensionError",
    "GeneratorSet", "Graph", "GraphError", "LimitReport", "Lobe",
    "LobeClasses", "LobeDecomposition", "OrbitCounts", "OrbitPartition",
    "ResourceCapError", "TauTable", "TransitivityError", "Verdict",
    "automorphism_generators", "build_truncation", "canonical_certificate",
    "classify", "classify_direct", "classify_limit", "connectivity_class",
    "decompose", "extend_lobe_isomorphism", "find_isomorphism",
    "generator_set", "group_order", "is_arc_transitive_thm",
    "is_edge_transitive_thm", "is_lobe_transitive_thm",
    "is_vertex_transitive_thm", "k_arc_orbit_count", "lobe_ball",
    "lobe_classes", "lobe_stabilizer", "make_graph", "named_graph",
    "orbit_partition", "parse_graph", "restrict_to", "serialize_graph",
    "spec_equivalent", "spec_to_json_dict", "tau_table",
    "tree_edge_transitivity", "validate_spec", "verify_interior",
    "verify_local_transitivity", "with_depth",
]
