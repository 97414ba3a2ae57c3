"""Forman-Ricci curvature of edges and nodes, and the edge-indexed
Bochner Laplacian with its rough/curvature decomposition.

"Parallel" edges on a network are edges sharing exactly one endpoint:
there are no 2-cells, so edges have children (nodes) but no parents.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
import scipy.sparse as sp

from .backend import get_kernels
from .errors import (
    NonpositiveWeightError,
    UndirectedNetworkError,
    UnknownEdgeError,
    UnknownNodeError,
)
from .graph import WeightedNetwork

__all__ = [
    "CurvatureField",
    "EdgeOperator",
    "edge_curvatures",
    "forman_edge_curvature",
    "node_curvatures",
    "forman_node_curvature",
    "directed_curvature",
    "node_in_out_curvature",
    "bochner_laplacian",
    "curvature_map",
]


def _check_positive(g: WeightedNetwork) -> None:
    if g.n_nodes and np.any(g.node_weight <= 0):
        raise NonpositiveWeightError("node weights must be strictly positive")
    if g.n_edges and np.any(g.edge_weight <= 0):
        raise NonpositiveWeightError("edge weights must be strictly positive")


def edge_curvatures(g: WeightedNetwork) -> np.ndarray:
    """Forman-Ricci curvature of every edge as a length-m vector.

    For unit weights this collapses to 4 - deg(v1) - deg(v2).
    """
    _check_positive(g)
    if g.n_edges == 0:
        return np.zeros(0)
    k = get_kernels()
    return k.edge_curvature(g.edges[:, 0], g.edges[:, 1], g.node_weight, g.edge_weight)


def forman_edge_curvature(g: WeightedNetwork, e: int) -> float:
    if not 0 <= e < g.n_edges:
        raise UnknownEdgeError(f"no edge with id {e}")
    return float(edge_curvatures(g)[e])


def node_curvatures(g: WeightedNetwork, edge_curv: np.ndarray | None = None) -> np.ndarray:
    """Per-node curvature: sum of the curvatures of the incident edges."""
    if edge_curv is None:
        edge_curv = edge_curvatures(g)
    f = np.zeros(g.n_nodes)
    if g.n_edges:
        np.add.at(f, g.edges[:, 0], edge_curv)
        np.add.at(f, g.edges[:, 1], edge_curv)
    return f


def forman_node_curvature(g: WeightedNetwork, v: int) -> float:
    if not 0 <= v < g.n_nodes:
        raise UnknownNodeError(f"no node with id {v}")
    return float(node_curvatures(g)[v])


def directed_curvatures(g: WeightedNetwork) -> tuple[np.ndarray, np.ndarray]:
    """Head and tail contributions for all edges of a directed network.

    The head of u -> v is u; incoming edges are measured at the head and
    outgoing edges at the tail.
    """
    if not g.directed:
        raise UndirectedNetworkError("directed curvature needs a directed network")
    _check_positive(g)
    if g.n_edges == 0:
        return np.zeros(0), np.zeros(0)
    k = get_kernels()
    return k.directed_edge_curvature(g.edges[:, 0], g.edges[:, 1], g.node_weight, g.edge_weight)


def directed_curvature(g: WeightedNetwork, e: int) -> tuple[float, float, float]:
    """(head, tail, total) contributions of directed edge e."""
    if not 0 <= e < g.n_edges:
        raise UnknownEdgeError(f"no edge with id {e}")
    head, tail = directed_curvatures(g)
    return float(head[e]), float(tail[e]), float(head[e] + tail[e])


def node_in_out_curvature(
    g: WeightedNetwork, v: int, convention: str = "at-node"
) -> tuple[float, float, float]:
    """In/out curvature of a node and their difference (net flow).

    in(v) sums a single directed-edge term over incoming edges, out(v)
    over outgoing ones.  With the default "at-node" convention the term
    evaluated at v itself is used (tail term for incoming edges, head
    term for outgoing); "far-node" picks the opposite endpoint's term.
    """
    if not g.directed:
        raise UndirectedNetworkError("in/out curvature needs a directed network")
    if not 0 <= v < g.n_nodes:
        raise UnknownNodeError(f"no node with id {v}")
    if convention not in ("at-node", "far-node"):
        raise ValueError(f"unknown convention {convention!r}")
    head, tail = directed_curvatures(g)
    incoming = g.edges[:, 1] == v
    outgoing = g.edges[:, 0] == v
    if convention == "at-node":
        cin = float(np.sum(tail[incoming]))
        cout = float(np.sum(head[outgoing]))
    else:
        cin = float(np.sum(head[incoming]))
        cout = float(np.sum(tail[outgoing]))
    return cin, cout, cin - cout


@dataclass(frozen=True)
class CurvatureField:
    """Edge curvature vector plus optional per-node aggregates."""

    edge_curvature: np.ndarray
    node_curvature: np.ndarray | None = None
    directed_parts: tuple[np.ndarray, np.ndarray] | None = None

    @classmethod
    def compute(cls, g: WeightedNetwork, with_nodes: bool = True) -> "CurvatureField":
        ec = edge_curvatures(g)
        nc = node_curvatures(g, ec) if with_nodes else None
        parts = directed_curvatures(g) if g.directed else None
        return cls(edge_curvature=ec, node_curvature=nc, directed_parts=parts)


@dataclass(frozen=True)
class EdgeOperator:
    """Edge-indexed combinatorial Riemann-Laplace operator.

    `matrix` is the symmetric m x m operator; `diagonal_curvature` is the
    Forman-Ricci curvature vector, so matrix - diag(diagonal_curvature)
    is the non-negative rough Laplacian driving the Laplacian flow.
    """

    matrix: sp.csr_matrix
    diagonal_curvature: np.ndarray

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def rough(self) -> sp.csr_matrix:
        """Rough-Laplacian part: matrix - diag(curvature)."""
        return (self.matrix - sp.diags(self.diagonal_curvature)).tocsr()

    def apply_rough(self, x: np.ndarray) -> np.ndarray:
        return self.rough @ x


def bochner_laplacian(g: WeightedNetwork) -> EdgeOperator:
    """Assemble the edge-indexed Bochner Laplacian of the network.

    Off-diagonal (e1, e2): sum over shared endpoints v of
    eps * w(v) / sqrt(gamma(e1) * gamma(e2)), with eps the product of the
    two edge orientation flags (+1 when no flags are stored).  Diagonal
    (e, e): sum over the two endpoints of w(v) / gamma(e).
    """
    _check_positive(g)
    m = g.n_edges
    w = g.node_weight
    gamma = g.edge_weight
    orient = g.orientation if g.orientation is not None else np.ones(m)
    # one signed factor per edge; pairing them first keeps the assembled
    # matrix exactly symmetric (x[a]*x[b] is commutative bit-for-bit)
    signed_inv_sqrt = orient / np.sqrt(gamma)

    rows: list[np.ndarray] = []
    cols: list[np.ndarray] = []
    vals: list[np.ndarray] = []
    for v, inc in enumerate(g.incidence):
        if len(inc) == 0:
            continue
        a, b = np.meshgrid(inc, inc, indexing="ij")
        a, b = a.ravel(), b.ravel()
        rows.append(a)
        cols.append(b)
        vals.append(signed_inv_sqrt[a] * signed_inv_sqrt[b] * w[v])
    if rows:
        box = sp.coo_matrix(
            (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
            shape=(m, m),
        ).tocsr()
    else:
        box = sp.csr_matrix((m, m))
    return EdgeOperator(matrix=box, diagonal_curvature=edge_curvatures(g))


def curvature_map(g: WeightedNetwork, field: CurvatureField | None = None) -> np.ndarray:
    """Node-by-node curvature matrix; absent edges are NaN.

    Undirected networks give a symmetric map, directed ones set only the
    (u, v) cell for edge u -> v.
    """
    if field is None:
        field = CurvatureField.compute(g, with_nodes=False)
    if len(field.edge_curvature) != g.n_edges:
        raise UnknownEdgeError("curvature field does not cover all edges")
    mat = np.full((g.n_nodes, g.n_nodes), np.nan)
    if g.n_edges:
        u, v = g.edges[:, 0], g.edges[:, 1]
        mat[u, v] = field.edge_curvature
        if not g.directed:
            mat[v, u] = field.edge_curvature
    return mat
