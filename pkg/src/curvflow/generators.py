"""Reference model networks and large-network subsampling.

Construction is delegated to networkx (seeded with Python's portable
Mersenne Twister, so edge lists are byte-identical across platforms);
generated graphs carry unit weights, with the combinatorial weighting
scheme applied afterwards when needed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import InvalidSpecError, TargetTooLargeError
from .graph import WeightedNetwork

__all__ = [
    "GeneratorSpec",
    "generate",
    "erdos_renyi",
    "watts_strogatz",
    "barabasi_albert",
    "sample_subgraph",
    "from_networkx",
]

RNG_ALGORITHM = "python-random-mt19937"  # recorded so outputs are reproducible


def from_networkx(nxg: nx.Graph, labels=None) -> WeightedNetwork:
    """Unit-weight WeightedNetwork from a networkx graph with nodes 0..n-1."""
    n = nxg.number_of_nodes()
    edges = np.asarray(sorted((min(u, v), max(u, v)) for u, v in nxg.edges()), dtype=np.int64)
    if len(edges) == 0:
        edges = np.zeros((0, 2), dtype=np.int64)
    return WeightedNetwork.build(n, edges, labels=labels)


@dataclass(frozen=True)
class GeneratorSpec:
    model: str  # "er" | "ws" | "ab"
    n: int
    p: float | None = None  # er
    k_ring: int | None = None  # ws
    beta: float | None = None  # ws
    m_attach: int | None = None  # ab
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise InvalidSpecError("n must be >= 2")
        if self.model == "er":
            if self.p is None or not 0 <= self.p <= 1:
                raise InvalidSpecError("ER needs p in [0, 1]")
        elif self.model == "ws":
            if self.k_ring is None or self.k_ring % 2 or self.k_ring < 2:
                raise InvalidSpecError("WS needs an even k_ring >= 2")
            if self.beta is None or not 0 <= self.beta <= 1:
                raise InvalidSpecError("WS needs beta in [0, 1]")
        elif self.model == "ab":
            if self.m_attach is None or not 1 <= self.m_attach < self.n:
                raise InvalidSpecError("AB needs 1 <= m_attach < n")
        else:
            raise InvalidSpecError(f"unknown model {self.model!r}")


def erdos_renyi(n: int, p: float, seed: int = 0) -> WeightedNetwork:
    return generate(GeneratorSpec(model="er", n=n, p=p, seed=seed))


def watts_strogatz(n: int, k_ring: int, beta: float, seed: int = 0) -> WeightedNetwork:
    return generate(GeneratorSpec(model="ws", n=n, k_ring=k_ring, beta=beta, seed=seed))


def barabasi_albert(n: int, m_attach: int, seed: int = 0) -> WeightedNetwork:
    return generate(GeneratorSpec(model="ab", n=n, m_attach=m_attach, seed=seed))


def generate(spec: GeneratorSpec) -> WeightedNetwork:
    """Deterministic simple undirected graph for the given model spec."""
    if spec.model == "er":
        nxg = nx.fast_gnp_random_graph(spec.n, spec.p, seed=spec.seed)
    elif spec.model == "ws":
        nxg = nx.watts_strogatz_graph(spec.n, spec.k_ring, spec.beta, seed=spec.seed)
    else:
        nxg = nx.barabasi_albert_graph(spec.n, spec.m_attach, seed=spec.seed)
    return from_networkx(nxg)


def sample_subgraph(g: WeightedNetwork, n_target: int, seed: int = 0) -> WeightedNetwork:
    """Snowball (BFS) sample: induced subgraph on the first n_target nodes
    reached breadth-first from a seeded random root.

    If the root's component is exhausted early, the walk restarts from a
    fresh random unvisited root, so exactly n_target nodes are returned.
    Node sampling order is deterministic per seed.
    """
    if n_target < 1:
        raise InvalidSpecError("n_target must be >= 1")
    if n_target > g.n_nodes:
        raise TargetTooLargeError(f"n_target {n_target} exceeds node count {g.n_nodes}")
    rng = random.Random(seed)
    neighbors: list[list[int]] = [[] for _ in range(g.n_nodes)]
    for u, v in g.edges:
        neighbors[u].append(int(v))
        neighbors[v].append(int(u))

    visited: set[int] = set()
    order: list[int] = []
    queue: list[int] = []
    while len(order) < n_target:
        if not queue:
            remaining = [v for v in range(g.n_nodes) if v not in visited]
            root = remaining[rng.randrange(len(remaining))]
            visited.add(root)
            queue.append(root)
            order.append(root)
            if len(order) == n_target:
                break
        head = queue.pop(0)
        for w in neighbors[head]:
            if w not in visited:
                visited.add(w)
                queue.append(w)
                order.append(w)
                if len(order) == n_target:
                    break

    keep = sorted(order)
    remap = {old: new for new, old in enumerate(keep)}
    kept_edges = []
    kept_w = []
    for i, (u, v) in enumerate(g.edges):
        if int(u) in remap and int(v) in remap:
            kept_edges.append((remap[int(u)], remap[int(v)]))
            kept_w.append(g.edge_weight[i])
    edges = (
        np.asarray(kept_edges, dtype=np.int64)
        if kept_edges
        else np.zeros((0, 2), dtype=np.int64)
    )
    # always record where each sampled node came from
    labels = tuple(g.label_of(v) for v in keep)
    return WeightedNetwork.build(
        len(keep),
        edges,
        directed=g.directed,
        node_weight=g.node_weight[keep],
        edge_weight=np.asarray(kept_w) if kept_w else None,
        labels=labels,
    )
