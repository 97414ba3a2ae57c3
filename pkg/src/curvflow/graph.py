"""Weighted-network data model and node/edge weighting schemes.

A :class:`WeightedNetwork` is immutable after construction: every mutation
(reweighting, flow steps, normalization) produces a fresh instance, so a
network can be shared freely between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from .errors import (
    CurvflowError,
    EmptyNetworkError,
    IsolatedNodeError,
    NonpositiveWeightError,
    UnknownNodeError,
)

__all__ = [
    "WeightedNetwork",
    "StandardWeightParams",
    "combinatorial_node_weights",
    "derive_edge_weights",
    "normalize_weights",
]


@dataclass(frozen=True)
class StandardWeightParams:
    """Standard-weight scaling: a p-cell carries weight w1 * w2**p.

    Combinatorial (unit) weights are the special case w1 = w2 = 1.
    """

    w1: float = 1.0
    w2: float = 1.0

    def __post_init__(self):
        if self.w1 <= 0 or self.w2 <= 0:
            raise NonpositiveWeightError("standard weight parameters must be positive")

    def cell_weight(self, p: int) -> float:
        return self.w1 * self.w2**p


@dataclass(frozen=True)
class WeightedNetwork:
    """Simple graph with positive node weights and positive edge weights.

    Nodes are the dense index range 0..n_nodes-1.  ``edges`` is an (m, 2)
    integer array; for undirected networks each pair is stored once with
    u < v.  ``orientation`` keeps the sign produced by the derived edge
    weighting scheme (the weight itself is always the magnitude); it is
    None when no orientation information exists.
    """

    n_nodes: int
    edges: np.ndarray
    node_weight: np.ndarray
    edge_weight: np.ndarray
    directed: bool = False
    orientation: np.ndarray | None = None
    labels: tuple[str, ...] | None = None

    @classmethod
    def build(
        cls,
        n_nodes: int,
        edges,
        *,
        directed: bool = False,
        node_weight=None,
        edge_weight=None,
        orientation=None,
        labels=None,
        validate: bool = True,
    ) -> "WeightedNetwork":
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if not directed and len(edges):
            # canonical storage: unordered pair as (min, max)
            edges = np.sort(edges, axis=1)
        if node_weight is None:
            node_weight = np.ones(n_nodes)
        node_weight = np.ascontiguousarray(node_weight, dtype=np.float64)
        if edge_weight is None:
            edge_weight = np.ones(len(edges))
        edge_weight = np.ascontiguousarray(edge_weight, dtype=np.float64)
        if orientation is not None:
            orientation = np.ascontiguousarray(orientation, dtype=np.float64)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
        g = cls(
            n_nodes=int(n_nodes),
            edges=edges,
            node_weight=node_weight,
            edge_weight=edge_weight,
            directed=bool(directed),
            orientation=orientation,
            labels=labels,
        )
        if validate:
            g.validate()
        return g

    def validate(self) -> None:
        n, m = self.n_nodes, self.n_edges
        if self.node_weight.shape != (n,):
            raise CurvflowError("node weight vector does not match node count")
        if self.edge_weight.shape != (m,):
            raise CurvflowError("edge weight vector does not match edge count")
        if self.labels is not None and len(self.labels) != n:
            raise CurvflowError("label table does not match node count")
        if m:
            if self.edges.min() < 0 or self.edges.max() >= n:
                raise UnknownNodeError("edge references a node outside 0..n-1")
            if np.any(self.edges[:, 0] == self.edges[:, 1]):
                raise CurvflowError("self-loops are not allowed")
            key = self.edges[:, 0] * np.int64(n) + self.edges[:, 1]
            if len(np.unique(key)) != m:
                raise CurvflowError("duplicate edges are not allowed")
        if n and np.any(self.node_weight <= 0):
            raise NonpositiveWeightError("all node weights must be strictly positive")
        if m and np.any(self.edge_weight <= 0):
            raise NonpositiveWeightError("all edge weights must be strictly positive")

    # -- basic accessors ---------------------------------------------------

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> np.ndarray:
        """Total degree per node (in+out for directed networks)."""
        d = np.zeros(self.n_nodes, dtype=np.int64)
        if self.n_edges:
            np.add.at(d, self.edges[:, 0], 1)
            np.add.at(d, self.edges[:, 1], 1)
        return d

    @cached_property
    def incidence(self) -> list[np.ndarray]:
        """Edge indices incident to each node, in edge order."""
        inc: list[list[int]] = [[] for _ in range(self.n_nodes)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return [np.asarray(a, dtype=np.int64) for a in inc]

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """(u, v) -> edge id; undirected keys are (min, max)."""
        return {(int(u), int(v)): i for i, (u, v) in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if self.directed else (min(u, v), max(u, v))
        try:
            return self.edge_index[key]
        except KeyError:
            raise UnknownNodeError(f"no edge {u}-{v}") from None

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    # -- derived instances -------------------------------------------------

    def with_edge_weights(self, weights) -> "WeightedNetwork":
        weights = np.ascontiguousarray(weights, dtype=np.float64)
        if weights.shape != (self.n_edges,):
            raise CurvflowError("edge weight vector does not match edge count")
        if self.n_edges and np.any(weights <= 0):
            raise NonpositiveWeightError("all edge weights must be strictly positive")
        return replace(self, edge_weight=weights)

    def with_node_weights(self, weights) -> "WeightedNetwork":
        weights = np.ascontiguousarray(weights, dtype=np.float64)
        if weights.shape != (self.n_nodes,):
            raise CurvflowError("node weight vector does not match node count")
        if self.n_nodes and np.any(weights <= 0):
            raise NonpositiveWeightError("all node weights must be strictly positive")
        return replace(self, node_weight=weights)


def combinatorial_node_weights(g: WeightedNetwork) -> np.ndarray:
    """Mean neighbor degree: w(v) = (1/deg v) * sum of deg(u) over u ~ v.

    The combinatorial scheme for networks without intrinsic node data.
    Rejects isolated nodes, for which the mean is undefined.
    """
    deg = g.degrees
    if g.n_nodes == 0:
        raise EmptyNetworkError("cannot weight an empty network")
    isolated = np.flatnonzero(deg == 0)
    if len(isolated):
        raise IsolatedNodeError(int(isolated[0]))
    s = np.zeros(g.n_nodes)
    u, v = g.edges[:, 0], g.edges[:, 1]
    np.add.at(s, u, deg[v].astype(np.float64))
    np.add.at(s, v, deg[u].astype(np.float64))
    return s / deg


def derive_edge_weights(g: WeightedNetwork) -> WeightedNetwork:
    """Edge weights from endpoint node weights: |gamma| = hypot(w_i, w_j).

    The Euclidean-distance analogy between the two endpoint weights.  The
    sign (+1 iff u <= v) is kept on the orientation flag; the stored weight
    is the positive magnitude, as the curvature formulas require positive
    weights.
    """
    if g.n_nodes == 0:
        raise EmptyNetworkError("cannot weight an empty network")
    u, v = g.edges[:, 0], g.edges[:, 1]
    w = g.node_weight
    gamma = np.hypot(w[u], w[v])
    orient = np.where(u <= v, 1.0, -1.0)
    return replace(g, edge_weight=gamma, orientation=orient)


def normalize_weights(g: WeightedNetwork) -> WeightedNetwork:
    """Divide node and edge weight families by their maximum magnitudes.

    Resulting magnitudes lie in (0, 1]; idempotent; relative order preserved.
    """
    if g.n_nodes == 0:
        raise EmptyNetworkError("cannot normalize an empty network")
    nw = g.node_weight / np.max(np.abs(g.node_weight))
    if g.n_edges:
        ew = g.edge_weight / np.max(np.abs(g.edge_weight))
    else:
        ew = g.edge_weight
    return replace(g, node_weight=nw, edge_weight=ew)
