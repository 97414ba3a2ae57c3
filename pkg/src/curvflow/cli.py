"""Command-line surface.

Exit codes: 0 success, 1 data error (reported on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .curvature import CurvatureField, curvature_map
from .distance import graph_distance
from .dynamics import align_edges, detect_changes
from .errors import CurvflowError
from .flows import FlowConfig, denoise, run_flow
from .generators import GeneratorSpec, generate, sample_subgraph
from .graph import (
    WeightedNetwork,
    combinatorial_node_weights,
    derive_edge_weights,
    normalize_weights,
)
from .netio import (
    EdgeListFormat,
    emit_curvature_map,
    emit_edge_values,
    emit_histogram,
    parse_edge_list,
    write_edge_list,
)

WEIGHT_SCHEMES = ("unit", "file", "combinatorial")


def _load(path: str, directed: bool, weights: str) -> WeightedNetwork:
    g = parse_edge_list(path, EdgeListFormat(directed=directed))
    if weights == "unit":
        g = g.with_edge_weights(np.ones(g.n_edges))
    elif weights == "combinatorial":
        g = g.with_node_weights(combinatorial_node_weights(g))
        g = derive_edge_weights(g)
        g = normalize_weights(g)
    return g


def _add_input_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="edge list file")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--weights", choices=WEIGHT_SCHEMES, default="combinatorial")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="curvflow", description=__doc__)
    ap.add_argument("--version", action="version", version=f"curvflow {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curvature", help="per-edge Forman-Ricci curvature CSV")
    _add_input_opts(p)
    p.add_argument("--output", required=True)

    p = sub.add_parser("histogram", help="curvature histogram CSV")
    _add_input_opts(p)
    p.add_argument("--output", required=True)
    p.add_argument("--bins", type=int, default=100)

    p = sub.add_parser("map", help="dense curvature map CSV (+ label table)")
    _add_input_opts(p)
    p.add_argument("--output", required=True)

    p = sub.add_parser("distance", help="curvature-distribution distance of two graphs")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--weights", choices=WEIGHT_SCHEMES, default="combinatorial")
    p.add_argument("--kernel", choices=("gaussian", "epanechnikov"), default="gaussian")
    p.add_argument("--bandwidth", type=float, default=None)
    p.add_argument("--bins", type=int, default=100)

    p = sub.add_parser("flow", help="run a Ricci/Laplacian flow, emit final weights")
    _add_input_opts(p)
    p.add_argument("--output", required=True)
    p.add_argument("--dt", type=float, default=1.0)
    p.add_argument("--K", type=int, default=10, dest="steps")
    p.add_argument(
        "--variant",
        choices=("standard", "normalized", "reverse", "laplacian"),
        default="standard",
    )

    p = sub.add_parser("denoise", help="Laplacian-flow denoising of edge weights")
    _add_input_opts(p)
    p.add_argument("--output", required=True)
    p.add_argument("--dt", type=float, default=0.05)
    p.add_argument("--K", type=int, default=3, dest="steps")

    p = sub.add_parser("changes", help="Ricci-flow change detection between snapshots")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--weights", choices=WEIGHT_SCHEMES, default="file")
    p.add_argument("--output", required=True)
    p.add_argument("--dt", type=float, default=1.0)
    p.add_argument("--K", type=int, default=10, dest="steps")
    p.add_argument("--threshold", type=float, default=0.1)

    p = sub.add_parser("generate", help="seeded ER/WS/AB model network")
    p.add_argument("--model", choices=("er", "ws", "ab"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--k-ring", type=int, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--m-attach", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)

    p = sub.add_parser("sample", help="snowball subsample of a large network")
    p.add_argument("--input", required=True)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--sample-size", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)

    return ap


def _run(args: argparse.Namespace) -> int:
    cmd = args.command
    if cmd == "curvature":
        g = _load(args.input, args.directed, args.weights)
        field = CurvatureField.compute(g)
        emit_edge_values(g, field.edge_curvature, args.output, "curvature")
    elif cmd == "histogram":
        g = _load(args.input, args.directed, args.weights)
        emit_histogram(CurvatureField.compute(g, with_nodes=False), args.bins, args.output)
    elif cmd == "map":
        g = _load(args.input, args.directed, args.weights)
        emit_curvature_map(curvature_map(g), args.output, g)
    elif cmd == "distance":
        ga = _load(args.a, args.directed, args.weights)
        gb = _load(args.b, args.directed, args.weights)
        d = graph_distance(
            ga, gb, kernel=args.kernel, bandwidth=args.bandwidth, bins=args.bins
        )
        print(d)
    elif cmd == "flow":
        g = _load(args.input, args.directed, args.weights)
        cfg = FlowConfig(dt=args.dt, steps=args.steps, variant=args.variant)
        final, _ = run_flow(g, cfg)
        emit_edge_values(final, final.edge_weight, args.output, "weight")
    elif cmd == "denoise":
        g = _load(args.input, args.directed, args.weights)
        cleaned, level = denoise(g, args.dt, args.steps)
        emit_edge_values(cleaned, cleaned.edge_weight, args.output, "weight")
        print(f"denoising_level {level}")
    elif cmd == "changes":
        ga = _load(args.a, args.directed, args.weights)
        gb = _load(args.b, args.directed, args.weights)
        pair = align_edges(ga, gb)
        report = detect_changes(pair, dt=args.dt, steps=args.steps, threshold=args.threshold)
        rows = ["src,dst,deviation,flagged\n"]
        flagged = set(report.flagged)
        for (ia, _), dev in zip(pair.shared, report.deviations):
            u, v = ga.edges[int(ia)]
            lu, lv = ga.label_of(int(u)), ga.label_of(int(v))
            key = (lu, lv) if ga.directed else (min(lu, lv), max(lu, lv))
            rows.append(f"{lu},{lv},{float(dev)!r},{int(key in flagged)}\n")
        for lu, lv in report.added:
            rows.append(f"{lu},{lv},,added\n")
        for lu, lv in report.removed:
            rows.append(f"{lu},{lv},,removed\n")
        from .netio import atomic_write_text

        atomic_write_text(args.output, "".join(rows))
    elif cmd == "generate":
        spec = GeneratorSpec(
            model=args.model,
            n=args.n,
            p=args.p,
            k_ring=args.k_ring,
            beta=args.beta,
            m_attach=args.m_attach,
            seed=args.seed,
        )
        write_edge_list(generate(spec), args.output)
    elif cmd == "sample":
        g = parse_edge_list(args.input, EdgeListFormat(directed=args.directed))
        write_edge_list(sample_subgraph(g, args.sample_size, args.seed), args.output)
    else:  # pragma: no cover - argparse enforces the choices
        raise AssertionError(cmd)
    return 0


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _run(args)
    except CurvflowError as exc:
        print(f"curvflow: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"curvflow: i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
