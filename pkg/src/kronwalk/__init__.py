"""Graph library for Kronecker products and primitive exponents.

Builds undirected graphs (loops allowed), measures parity-constrained
shortest walks and the primitive exponent, constructs Kronecker (tensor)
products, bounds exponents through odd-cycle eccentricities, predicts the
exact diameter of a product from its factors, and verifies every closed
form against brute force on small graphs.
"""

from .boolmat import (
    BoolMatrix,
    adjacency,
    bool_mul,
    bool_pow,
    kron_matrix,
    oracle_exponent,
)
from .cycles import (
    DEFAULT_CYCLE_CAP,
    CycleBoundReport,
    enumerate_odd_cycles,
    eccentricity_to_cycle,
    l_o_bound,
)
from .edgelist import format_edge_list, parse_edge_list, read_graph, write_graph
from .extlen import INF, ExtLen, is_finite
from .graphs import (
    Graph,
    enumerate_graphs,
    is_k_plus,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_f_family,
    make_h_family,
    make_path,
    random_graph,
)
from .kronecker import (
    decode_product_vertex,
    encode_product_vertex,
    kronecker_product,
    product_is_connected,
)
from .predict import (
    Bounds,
    DiameterPrediction,
    FactorSummary,
    diameter_bounds,
    predict_all_loops,
    predict_diameter,
    predict_family_product,
    predict_k_plus_factor,
    predict_k_plus_pair,
    predict_multipartite_factor,
    predict_with_trivial_factor,
    summarize,
)
from .walks import (
    ExponentReport,
    ParityDistances,
    diameter,
    distance_matrix,
    exponent,
    is_bipartite,
    is_connected,
    is_primitive,
    local_exponent,
    odd_girth,
    parity_distances,
)

__all__ = [
    "BoolMatrix",
    "Bounds",
    "CycleBoundReport",
    "DEFAULT_CYCLE_CAP",
    "DiameterPrediction",
    "ExponentReport",
    "ExtLen",
    "FactorSummary",
    "Graph",
    "INF",
    "ParityDistances",
    "adjacency",
    "bool_mul",
    "bool_pow",
    "decode_product_vertex",
    "diameter",
    "diameter_bounds",
    "distance_matrix",
    "eccentricity_to_cycle",
    "encode_product_vertex",
    "enumerate_graphs",
    "enumerate_odd_cycles",
    "exponent",
    "format_edge_list",
    "is_bipartite",
    "is_connected",
    "is_finite",
    "is_k_plus",
    "is_primitive",
    "kron_matrix",
    "kronecker_product",
    "l_o_bound",
    "local_exponent",
    "make_complete",
    "make_complete_multipartite",
    "make_cycle",
    "make_f_family",
    "make_h_family",
    "make_path",
    "odd_girth",
    "oracle_exponent",
    "parity_distances",
    "parse_edge_list",
    "predict_all_loops",
    "predict_diameter",
    "predict_family_product",
    "predict_k_plus_factor",
    "predict_k_plus_pair",
    "predict_multipartite_factor",
    "predict_with_trivial_factor",
    "product_is_connected",
    "random_graph",
    "read_graph",
    "summarize",
    "write_graph",
]
