"""Forman-Ricci curvature, Bochner Laplacian, discrete geometric flows
and curvature-distribution distances for weighted networks."""

from .backend import active_backend
from .curvature import (
    CurvatureField,
    EdgeOperator,
    bochner_laplacian,
    curvature_map,
    directed_curvature,
    edge_curvatures,
    forman_edge_curvature,
    forman_node_curvature,
    node_curvatures,
    node_in_out_curvature,
)
from .distance import (
    CurvatureDistribution,
    TransportPlan,
    bin_distribution,
    curvature_density,
    graph_distance,
    ground_distance,
    monotone_transport,
    silverman_bandwidth,
    solve_transport,
)
from .dynamics import ChangeReport, SnapshotPair, align_edges, detect_changes
from .flows import (
    FlowConfig,
    FlowTrace,
    denoise,
    laplacian_flow_step,
    mean_curvature,
    ricci_flow_step,
    run_flow,
)
from .generators import (
    GeneratorSpec,
    barabasi_albert,
    erdos_renyi,
    generate,
    sample_subgraph,
    watts_strogatz,
)
from .graph import (
    StandardWeightParams,
    WeightedNetwork,
    combinatorial_node_weights,
    derive_edge_weights,
    normalize_weights,
)
from .netio import EdgeListFormat, parse_edge_list, write_edge_list

__version__ = "0.1.0"

__all__ = [
    "active_backend",
    "CurvatureField",
    "EdgeOperator",
    "bochner_laplacian",
    "curvature_map",
    "directed_curvature",
    "edge_curvatures",
    "forman_edge_curvature",
    "forman_node_curvature",
    "node_curvatures",
    "node_in_out_curvature",
    "CurvatureDistribution",
    "TransportPlan",
    "bin_distribution",
    "curvature_density",
    "graph_distance",
    "ground_distance",
    "monotone_transport",
    "silverman_bandwidth",
    "solve_transport",
    "ChangeReport",
    "SnapshotPair",
    "align_edges",
    "detect_changes",
    "FlowConfig",
    "FlowTrace",
    "denoise",
    "laplacian_flow_step",
    "mean_curvature",
    "ricci_flow_step",
    "run_flow",
    "GeneratorSpec",
    "barabasi_albert",
    "erdos_renyi",
    "generate",
    "sample_subgraph",
    "watts_strogatz",
    "StandardWeightParams",
    "WeightedNetwork",
    "combinatorial_node_weights",
    "derive_edge_weights",
    "normalize_weights",
    "EdgeListFormat",
    "parse_edge_list",
    "write_edge_list",
]
