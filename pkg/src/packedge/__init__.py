"""Packing edge-colorings of subcubic graphs.

Decides, constructs, and verifies S-packing edge-colorings: an exact
backtracking solver with certificates, 2-factor based constructive colorings,
the supporting integer sequences, and generators for the graph families the
results are usually tested on.
"""

from .graphs import (ConflictGraph, EdgeId, Graph, Graph6Error, GraphError,
                     conflict_graph, edge_distance, encode_edge_list,
                     encode_graph6, parse_edge_list, parse_graph6)
from .factors import (NoTwoFactorError, TwoFactor, TypedEdgeSet,
                      VertexLabeling, check_p5_property,
                      enumerate_perfect_matchings, enumerate_two_factors,
                      find_type1_set, is_type1, is_type2, label_vertices,
                      min_odd_two_factor, partition_type2,
                      two_factor_from_matching)
from .solver import (PackingColoring, PackingSequence, SolveOutcome, Status,
                     VerifyResult, Violation, available_kernels,
                     color_conflict_graph, default_kernel, scan_corpus, solve,
                     verify)
from .constructive import (ConstructionError, ConstructionPlan,
                           MatchingPartition, assemble, check_1122_necessary,
                           construct_1112, construct_11133, construct_1113_oddness2,
                           construct_1114x5, construct_11k, construct_1k,
                           matching_partition_to_coloring, two_matching_color)
from .families import (FAMILIES, FamilySpec, flower_snark, generalized_petersen,
                       generate, line_graph_diameter, obstruction12, petersen,
                       prism, tietze, tree_even, tree_odd)
from .sequences import (counting_bound, sequence_table, tree_edge_count,
                        type1_degree_bound, type2_degree_bound,
                        type2_degree_bound_variant, type2_layer_count)
from .certificates import (CertificateError, certificate_from_coloring,
                           certificate_from_outcome, load_certificate,
                           verify_certificate)

__version__ = "0.1.0"
