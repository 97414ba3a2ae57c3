"""Shared fixtures and independent oracles.

The oracles here are deliberate re-derivations, written as literal loops
against the definitions, so they share no code path with the library
kernels they check.
"""

from __future__ import annotations

import math

import networkx as nx
import numpy as np
import pytest

from curvflow import WeightedNetwork


def net_from_nx(nxg, *, node_weight=None, edge_weight=None, labels=None) -> WeightedNetwork:
    edges = np.asarray(
        sorted((min(u, v), max(u, v)) for u, v in nxg.edges()), dtype=np.int64
    )
    if len(edges) == 0:
        edges = np.zeros((0, 2), dtype=np.int64)
    return WeightedNetwork.build(
        nxg.number_of_nodes(),
        edges,
        node_weight=node_weight,
        edge_weight=edge_weight,
        labels=labels,
    )


def random_weighted_net(rng: np.random.Generator, n_max: int = 40) -> WeightedNetwork:
    """Random connected-ish simple graph with random positive weights."""
    n = int(rng.integers(2, n_max + 1))
    p = float(rng.uniform(0.05, 0.6))
    nxg = nx.gnp_random_graph(n, p, seed=int(rng.integers(0, 2**31)))
    if nxg.number_of_edges() == 0:
        nxg.add_edge(0, 1)
    g = net_from_nx(nxg)
    return g.with_node_weights(rng.uniform(0.2, 2.0, g.n_nodes)).with_edge_weights(
        rng.uniform(0.2, 2.0, g.n_edges)
    )


def brute_edge_curvature(g: WeightedNetwork) -> np.ndarray:
    """Literal translation of the edge curvature definition.

    Ric(e) = g_e * ( w_u/g_e + w_v/g_e
                     - sum_{e_u ~ u, e_u != e} w_u / sqrt(g_e * g_{e_u})
                     - sum_{e_v ~ v, e_v != e} w_v / sqrt(g_e * g_{e_v}) )
    """
    out = np.zeros(g.n_edges)
    for e, (u, v) in enumerate(g.edges):
        u, v = int(u), int(v)
        ge = g.edge_weight[e]
        wu, wv = g.node_weight[u], g.node_weight[v]
        acc = wu / ge + wv / ge
        for e2, (a, b) in enumerate(g.edges):
            if e2 == e:
                continue
            if u in (int(a), int(b)):
                acc -= wu / math.sqrt(ge * g.edge_weight[e2])
            if v in (int(a), int(b)):
                acc -= wv / math.sqrt(ge * g.edge_weight[e2])
        out[e] = ge * acc
    return out


def dense_box_operator(g: WeightedNetwork) -> np.ndarray:
    """Dense independent assembly of the edge-indexed operator.

    Diagonal: sum over the two endpoints of w(v)/gamma(e).  Off-diagonal
    (e1, e2): sum over shared endpoints of w(v)/sqrt(gamma_1 * gamma_2),
    times the product of orientation flags.
    """
    m = g.n_edges
    orient = g.orientation if g.orientation is not None else np.ones(m)
    box = np.zeros((m, m))
    for e1 in range(m):
        u1, v1 = (int(x) for x in g.edges[e1])
        box[e1, e1] = (g.node_weight[u1] + g.node_weight[v1]) / g.edge_weight[e1]
        for e2 in range(m):
            if e1 == e2:
                continue
            shared = {u1, v1} & {int(x) for x in g.edges[e2]}
            for v in shared:
                box[e1, e2] += (
                    orient[e1]
                    * orient[e2]
                    * g.node_weight[v]
                    / math.sqrt(g.edge_weight[e1] * g.edge_weight[e2])
                )
    return box


@pytest.fixture(scope="session")
def karate() -> WeightedNetwork:
    return net_from_nx(nx.karate_club_graph())
