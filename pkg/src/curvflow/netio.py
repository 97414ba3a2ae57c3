"""Edge-list ingestion and CSV emission.

Input format: whitespace-delimited lines "src dst [weight]", '#' comments.
Node indices are assigned by first appearance, which makes every run
deterministic for a given file.  All outputs are CSV and written
atomically (temp file + rename).
"""

from __future__ import annotations

import os
import tempfile
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .curvature import CurvatureField
from .errors import (
    DuplicateDirectedEdgeError,
    DuplicateEdgeWarning,
    EmptyInputError,
    ParseError,
)
from .graph import WeightedNetwork

__all__ = [
    "EdgeListFormat",
    "parse_edge_list",
    "write_edge_list",
    "emit_histogram",
    "emit_curvature_map",
    "emit_edge_values",
    "atomic_write_text",
]


@dataclass(frozen=True)
class EdgeListFormat:
    comment_prefix: str = "#"
    directed: bool = False


def parse_edge_list(source, fmt: EdgeListFormat | None = None) -> WeightedNetwork:
    """Parse a SNAP/KONECT-style edge list into a WeightedNetwork.

    `source` is a path or an iterable of lines.  Missing weight columns
    mean unit weights.  Duplicate undirected edges collapse with a
    warning; duplicate directed edges are an error.
    """
    fmt = fmt or EdgeListFormat()
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh, fmt)

    index: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    weights: list[float] = []
    seen: dict[tuple[int, int], int] = {}
    any_weight = False

    def node_id(label: str) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for line_no, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith(fmt.comment_prefix):
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(line_no, f"expected 2 or 3 columns, got {len(parts)}")
        u = node_id(parts[0])
        v = node_id(parts[1])
        if u == v:
            raise ParseError(line_no, f"self-loop on node {parts[0]}")
        if len(parts) == 3:
            try:
                w = float(parts[2])
            except ValueError:
                raise ParseError(line_no, f"bad weight {parts[2]!r}") from None
            any_weight = True
        else:
            w = 1.0
        key = (u, v) if fmt.directed else (min(u, v), max(u, v))
        if key in seen:
            if fmt.directed:
                raise DuplicateDirectedEdgeError(line_no, parts[0], parts[1])
            warnings.warn(
                f"line {line_no}: duplicate undirected edge {parts[0]}-{parts[1]} collapsed",
                DuplicateEdgeWarning,
                stacklevel=2,
            )
            continue
        seen[key] = len(edges)
        edges.append(key if not fmt.directed else (u, v))
        weights.append(w)

    n = len(labels)
    edge_arr = np.asarray(edges, dtype=np.int64) if edges else np.zeros((0, 2), np.int64)
    weight_arr = np.asarray(weights) if any_weight else None
    return WeightedNetwork.build(
        n, edge_arr, directed=fmt.directed, edge_weight=weight_arr, labels=labels
    )


def atomic_write_text(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_edge_list(g: WeightedNetwork, path) -> None:
    """Emit an edge list that round-trips bit-exactly through the parser."""
    lines = [f"# curvflow edge list; directed={g.directed}\n"]
    for i, (u, v) in enumerate(g.edges):
        lines.append(
            f"{g.label_of(int(u))} {g.label_of(int(v))} {float(g.edge_weight[i])!r}\n"
        )
    atomic_write_text(path, "".join(lines))


def emit_histogram(field: CurvatureField, bins: int, path) -> None:
    """Curvature histogram CSV: bin_lo, bin_hi, count, density.

    The density column integrates to 1 over the binned range.
    """
    values = np.asarray(field.edge_curvature)
    if len(values) == 0:
        raise EmptyInputError("cannot histogram an empty curvature field")
    counts, edges = np.histogram(values, bins=bins)
    widths = np.diff(edges)
    density = counts / (counts.sum() * widths)
    rows = ["bin_lo,bin_hi,count,density\n"]
    for lo, hi, c, d in zip(edges[:-1], edges[1:], counts, density):
        rows.append(f"{float(lo)!r},{float(hi)!r},{int(c)},{float(d)!r}\n")
    atomic_write_text(path, "".join(rows))


def _label_table(g: WeightedNetwork) -> str:
    out = ["index,label\n"]
    for v in range(g.n_nodes):
        out.append(f"{v},{g.label_of(v)}\n")
    return "".join(out)


def emit_curvature_map(matrix: np.ndarray, path, g: WeightedNetwork | None = None) -> None:
    """Dense n x n CSV; absent entries (NaN) become empty cells.

    When the network is supplied, a label<->index table is written next
    to the matrix at <path>.labels.csv.
    """
    rows = []
    for row in matrix:
        rows.append(",".join("" if np.isnan(x) else repr(float(x)) for x in row) + "\n")
    atomic_write_text(path, "".join(rows))
    if g is not None:
        atomic_write_text(str(path) + ".labels.csv", _label_table(g))


def emit_edge_values(g: WeightedNetwork, values: np.ndarray, path, column: str) -> None:
    """Per-edge CSV: source label, target label, value."""
    buf = [f"src,dst,{column}\n"]
    for i, (u, v) in enumerate(g.edges):
        buf.append(f"{g.label_of(int(u))},{g.label_of(int(v))},{float(values[i])!r}\n")
    atomic_write_text(path, "".join(buf))
