"""Pure-numpy reference kernels for the per-edge curvature formulas.

The edge curvature of e = (v1, v2) with weights w (nodes) and g (edges) is

    Ric(e) = w[v1] + w[v2]
             - sqrt(g[e]) * ( w[v1] * sum over other edges e' at v1 of 1/sqrt(g[e'])
                            + w[v2] * sum over other edges e' at v2 of 1/sqrt(g[e']) )

obtained from the weighted formula by cancelling g[e] against the 1/g[e]
endpoint terms.  The per-node inverse-sqrt strengths make the whole field
an O(n + m) computation.
"""

from __future__ import annotations

import numpy as np


def node_strengths(u, v, n_nodes, edge_w):
    """Per-node sum of 1/sqrt(edge weight) over incident edges."""
    inv_sqrt = 1.0 / np.sqrt(edge_w)
    s = np.zeros(n_nodes)
    np.add.at(s, u, inv_sqrt)
    np.add.at(s, v, inv_sqrt)
    return s, inv_sqrt


def edge_curvature(u, v, node_w, edge_w):
    """Forman-Ricci curvature of every edge (undirected convention)."""
    s, inv_sqrt = node_strengths(u, v, len(node_w), edge_w)
    sq = np.sqrt(edge_w)
    return node_w[u] + node_w[v] - sq * (
        node_w[u] * (s[u] - inv_sqrt) + node_w[v] * (s[v] - inv_sqrt)
    )


def directed_edge_curvature(u, v, node_w, edge_w):
    """Head/tail contributions for directed edges u -> v.

    Incoming edges are measured at the head u, outgoing edges at the
    tail v; the edge itself never appears in either neighbor set.
    """
    n = len(node_w)
    inv_sqrt = 1.0 / np.sqrt(edge_w)
    s_in = np.zeros(n)
    np.add.at(s_in, v, inv_sqrt)  # edge u->v is incoming at v
    s_out = np.zeros(n)
    np.add.at(s_out, u, inv_sqrt)  # ... and outgoing at u
    sq = np.sqrt(edge_w)
    head = node_w[u] * (1.0 - sq * s_in[u])
    tail = node_w[v] * (1.0 - sq * s_out[v])
    return head, tail
