"""Curvature-distribution dissimilarity between graphs.

Pipeline: per-edge curvature samples -> kernel density estimate ->
equal-width bins with midpoint representatives -> ground distances on the
curvature axis -> minimum-cost transport -> earth mover's distance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .curvature import edge_curvatures
from .errors import (
    DegenerateSupportError,
    EmptyInputError,
    EmptyNetworkError,
    InfeasibleMassError,
    NonpositiveBandwidthError,
)
from .graph import WeightedNetwork

__all__ = [
    "KernelDensity",
    "CurvatureDistribution",
    "TransportPlan",
    "silverman_bandwidth",
    "curvature_density",
    "bin_distribution",
    "ground_distance",
    "solve_transport",
    "monotone_transport",
    "graph_distance",
]

# spread-free fallback bandwidth for degenerate samples (e.g. regular
# graphs, where every curvature value coincides); location-independent so
# that shifting the samples shifts the density rigidly
_DEGENERATE_BANDWIDTH = 1e-3

_SQRT2PI = float(np.sqrt(2.0 * np.pi))

KERNELS = ("gaussian", "epanechnikov")


def silverman_bandwidth(samples: np.ndarray) -> float:
    """Silverman's rule of thumb, with a small fixed fallback for
    zero-spread samples."""
    samples = np.asarray(samples, dtype=np.float64)
    n = len(samples)
    if n == 0:
        raise EmptyInputError("cannot choose a bandwidth for an empty sample")
    if n == 1:
        return _DEGENERATE_BANDWIDTH
    std = float(np.std(samples, ddof=1))
    q75, q25 = np.percentile(samples, [75.0, 25.0])
    iqr = float(q75 - q25)
    spread = min(x for x in (std, iqr / 1.34) if x > 0) if (std > 0 or iqr > 0) else 0.0
    if spread <= 0:
        return _DEGENERATE_BANDWIDTH
    return 0.9 * spread * n ** (-0.2)


@dataclass(frozen=True)
class KernelDensity:
    """Evaluator for (1/(n h)) * sum_i K((x - c_i) / h)."""

    centers: np.ndarray
    bandwidth: float
    kernel: str = "gaussian"

    def __post_init__(self):
        if len(self.centers) == 0:
            raise EmptyInputError("kernel density needs at least one sample")
        if self.bandwidth <= 0:
            raise NonpositiveBandwidthError("bandwidth must be positive")
        if self.kernel not in KERNELS:
            raise ValueError(f"kernel must be one of {KERNELS}")

    def __call__(self, x) -> np.ndarray:
        x = np.atleast_1d(np.asarray(x, dtype=np.float64))
        u = (x[:, None] - self.centers[None, :]) / self.bandwidth
        if self.kernel == "gaussian":
            k = np.exp(-0.5 * u * u) / _SQRT2PI
        else:  # epanechnikov
            k = np.where(np.abs(u) < 1.0, 0.75 * (1.0 - u * u), 0.0)
        return k.sum(axis=1) / (len(self.centers) * self.bandwidth)

    @property
    def sample_range(self) -> tuple[float, float]:
        return float(self.centers.min()), float(self.centers.max())


def curvature_density(
    curvatures, kernel: str = "gaussian", bandwidth: float | None = None
) -> KernelDensity:
    """KDE over the full curvature sample; Silverman bandwidth by default."""
    c = np.asarray(curvatures, dtype=np.float64).ravel()
    if len(c) == 0:
        raise EmptyInputError("empty curvature sample")
    if bandwidth is None:
        bandwidth = silverman_bandwidth(c)
    return KernelDensity(centers=c, bandwidth=float(bandwidth), kernel=kernel)


@dataclass(frozen=True)
class CurvatureDistribution:
    """Binned cluster set: interval edges, midpoint representatives and
    normalized masses."""

    bin_edges: np.ndarray  # length k+1, partition of the support
    representatives: np.ndarray  # length k, interval midpoints
    masses: np.ndarray  # length k, sum to total_mass
    total_mass: float = 1.0

    @property
    def k(self) -> int:
        return len(self.representatives)


def bin_distribution(
    density: KernelDensity, support: tuple[float, float], k: int
) -> CurvatureDistribution:
    """Split the support into k equal-width bins; each bin becomes a
    cluster (midpoint, density-at-midpoint), with masses renormalized."""
    lo, hi = float(support[0]), float(support[1])
    if not lo < hi:
        raise DegenerateSupportError(f"support [{lo}, {hi}] is degenerate")
    if k < 1:
        raise ValueError("k must be >= 1")
    edges = np.linspace(lo, hi, k + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    masses = density(mids)
    total = masses.sum()
    if total <= 0:
        # density vanishes on the whole support; fall back to uniform mass
        masses = np.full(k, 1.0 / k)
    else:
        masses = masses / total
    return CurvatureDistribution(bin_edges=edges, representatives=mids, masses=masses)


def ground_distance(p1: CurvatureDistribution, p2: CurvatureDistribution) -> np.ndarray:
    """Pairwise |p1_i - p2_j| on the curvature axis."""
    if p1.k == 0 or p2.k == 0:
        raise EmptyInputError("both distributions must be nonempty")
    return np.abs(p1.representatives[:, None] - p2.representatives[None, :])


@dataclass(frozen=True)
class TransportPlan:
    flow: np.ndarray
    ground: np.ndarray
    cost: float
    emd: float


def _check_masses(a: np.ndarray, b: np.ndarray) -> None:
    if np.any(a < 0) or np.any(b < 0):
        raise InfeasibleMassError("masses must be nonnegative")
    if a.sum() <= 0 or b.sum() <= 0:
        raise InfeasibleMassError("total mass must be positive")


def solve_transport(
    p1: CurvatureDistribution, p2: CurvatureDistribution, ground: np.ndarray
) -> TransportPlan:
    """Exact minimum-cost transport between two cluster sets.

    Moves min(total source, total sink) mass subject to the marginal
    constraints; solved as a linear program (HiGHS).
    """
    a = np.asarray(p1.masses, dtype=np.float64)
    b = np.asarray(p2.masses, dtype=np.float64)
    _check_masses(a, b)
    k1, k2 = len(a), len(b)
    if ground.shape != (k1, k2):
        raise ValueError("ground distance matrix shape does not match the bins")
    total = min(a.sum(), b.sum())

    # variables f_ij flattened row-major
    n_var = k1 * k2
    a_ub = np.zeros((k1 + k2, n_var))
    for i in range(k1):
        a_ub[i, i * k2 : (i + 1) * k2] = 1.0
    for j in range(k2):
        a_ub[k1 + j, j::k2] = 1.0
    b_ub = np.concatenate([a, b])
    a_eq = np.ones((1, n_var))
    res = linprog(
        c=ground.ravel(),
        A_ub=a_ub,
        b_ub=b_ub,
        A_eq=a_eq,
        b_eq=[total],
        bounds=(0, None),
        method="highs",
    )
    if not res.success:
        raise InfeasibleMassError(f"transport LP failed: {res.message}")
    flow = res.x.reshape(k1, k2)
    cost = float(np.sum(flow * ground))
    moved = float(flow.sum())
    return TransportPlan(flow=flow, ground=ground, cost=cost, emd=cost / moved)


def monotone_transport(
    p1: CurvatureDistribution, p2: CurvatureDistribution
) -> TransportPlan:
    """1-D fast path: the monotone (north-west-corner on sorted supports)
    coupling, optimal whenever the ground distance is |p_i - q_j|."""
    a = np.asarray(p1.masses, dtype=np.float64)
    b = np.asarray(p2.masses, dtype=np.float64)
    _check_masses(a, b)
    sa, sb = a.sum(), b.sum()
    # balance defensively so the greedy sweep consumes both sides fully
    if not np.isclose(sa, sb, rtol=1e-12, atol=1e-12):
        raise InfeasibleMassError("monotone coupling requires balanced masses")
    oi = np.argsort(p1.representatives, kind="stable")
    oj = np.argsort(p2.representatives, kind="stable")
    flow = np.zeros((p1.k, p2.k))
    ra = a[oi].copy()
    rb = b[oj].copy()
    i = j = 0
    while i < len(ra) and j < len(rb):
        move = min(ra[i], rb[j])
        flow[oi[i], oj[j]] += move
        # min() returns one of the operands, so at least one remainder
        # becomes exactly zero and the sweep always advances
        ra[i] -= move
        rb[j] -= move
        if ra[i] == 0.0:
            i += 1
        if j < len(rb) and rb[j] == 0.0:
            j += 1
    ground = ground_distance(p1, p2)
    cost = float(np.sum(flow * ground))
    moved = float(flow.sum())
    return TransportPlan(flow=flow, ground=ground, cost=cost, emd=cost / moved)


def graph_distance(
    g1: WeightedNetwork,
    g2: WeightedNetwork,
    *,
    kernel: str = "gaussian",
    bandwidth: float | None = None,
    bins: int = 100,
) -> float:
    """Earth mover's distance between the curvature distributions of two
    graphs; symmetric, and exactly zero for identical curvature samples.

    Both densities are binned on a shared support (union of the two
    sample ranges, padded by one bandwidth) so ground distances are
    well-scaled.
    """
    if g1.n_edges == 0 or g2.n_edges == 0:
        raise EmptyNetworkError("graph distance needs nonempty edge sets")
    c1 = edge_curvatures(g1)
    c2 = edge_curvatures(g2)
    f1 = curvature_density(c1, kernel=kernel, bandwidth=bandwidth)
    f2 = curvature_density(c2, kernel=kernel, bandwidth=bandwidth)
    pad = max(f1.bandwidth, f2.bandwidth)
    lo = min(f1.sample_range[0], f2.sample_range[0]) - pad
    hi = max(f1.sample_range[1], f2.sample_range[1]) + pad
    p1 = bin_distribution(f1, (lo, hi), bins)
    p2 = bin_distribution(f2, (lo, hi), bins)
    return monotone_transport(p1, p2).emd
