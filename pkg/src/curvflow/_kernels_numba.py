"""Numba-compiled kernels; same contracts as `_kernels_numpy`.

The per-node strength accumulation runs serially (fixed summation order,
so the result is independent of thread count); the per-edge loop is
embarrassingly parallel and runs under prange.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange


@njit(cache=True)
def _strengths(u, v, n_nodes, inv_sqrt):
    s = np.zeros(n_nodes)
    for i in range(len(u)):
        s[u[i]] += inv_sqrt[i]
        s[v[i]] += inv_sqrt[i]
    return s


def node_strengths(u, v, n_nodes, edge_w):
    inv_sqrt = 1.0 / np.sqrt(edge_w)
    return _strengths(u, v, n_nodes, inv_sqrt), inv_sqrt


@njit(cache=True, parallel=True)
def _edge_curvature(u, v, node_w, edge_w, s, inv_sqrt):
    m = len(u)
    out = np.empty(m)
    for i in prange(m):
        sq = np.sqrt(edge_w[i])
        wu = node_w[u[i]]
        wv = node_w[v[i]]
        out[i] = wu + wv - sq * (wu * (s[u[i]] - inv_sqrt[i]) + wv * (s[v[i]] - inv_sqrt[i]))
    return out


def edge_curvature(u, v, node_w, edge_w):
    s, inv_sqrt = node_strengths(u, v, len(node_w), edge_w)
    return _edge_curvature(u, v, node_w, edge_w, s, inv_sqrt)


@njit(cache=True)
def _directed_strengths(u, v, n_nodes, inv_sqrt):
    s_in = np.zeros(n_nodes)
    s_out = np.zeros(n_nodes)
    for i in range(len(u)):
        s_in[v[i]] += inv_sqrt[i]
        s_out[u[i]] += inv_sqrt[i]
    return s_in, s_out


@njit(cache=True, parallel=True)
def _directed_edge_curvature(u, v, node_w, edge_w, s_in, s_out):
    m = len(u)
    head = np.empty(m)
    tail = np.empty(m)
    for i in prange(m):
        sq = np.sqrt(edge_w[i])
        head[i] = node_w[u[i]] * (1.0 - sq * s_in[u[i]])
        tail[i] = node_w[v[i]] * (1.0 - sq * s_out[v[i]])
    return head, tail


def directed_edge_curvature(u, v, node_w, edge_w):
    inv_sqrt = 1.0 / np.sqrt(edge_w)
    s_in, s_out = _directed_strengths(u, v, len(node_w), inv_sqrt)
    return _directed_edge_curvature(u, v, node_w, edge_w, s_in, s_out)
