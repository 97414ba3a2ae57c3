"""Throughput comparison of the two curvature-kernel backends.

Usage: python benchmarks/bench_kernels.py [n_nodes] [m_attach]

Generates a scale-free test graph with random weights, then times the
per-edge curvature kernel under the pure-numpy backend and the numba
backend at several thread counts.  Results from all configurations are
checked against each other before timings are reported.
"""

from __future__ import annotations

import sys
import time

import numpy as np

from curvflow import barabasi_albert
from curvflow.backend import get_kernels


def best_of(fn, reps: int = 7) -> float:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 20000
    m_attach = int(sys.argv[2]) if len(sys.argv) > 2 else 5

    g = barabasi_albert(n, m_attach, seed=0)
    rng = np.random.default_rng(0)
    g = g.with_node_weights(rng.uniform(0.5, 1.0, g.n_nodes)).with_edge_weights(
        rng.uniform(0.5, 1.0, g.n_edges)
    )
    args = (g.edges[:, 0], g.edges[:, 1], g.node_weight, g.edge_weight)
    print(f"graph: {g.n_nodes} nodes, {g.n_edges} edges")

    k_np = get_kernels("numpy")
    ref = k_np.edge_curvature(*args)
    t = best_of(lambda: k_np.edge_curvature(*args))
    print(f"numpy backend:            {t * 1e3:8.2f} ms")

    try:
        import numba
    except ImportError:
        print("numba not available; skipping the jit backend")
        return

    k_nb = get_kernels("numba")
    k_nb.edge_curvature(*args)  # JIT warm-up
    for threads in (1, 2, 4, 8):
        try:
            numba.set_num_threads(threads)
        except ValueError:
            continue
        out = k_nb.edge_curvature(*args)
        assert np.allclose(out, ref, rtol=0, atol=1e-10), "backend results diverge"
        t = best_of(lambda: k_nb.edge_curvature(*args))
        print(f"numba backend, {threads} thread(s): {t * 1e3:8.2f} ms")


if __name__ == "__main__":
    main()
