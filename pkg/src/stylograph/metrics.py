"""Per-node measurements on the undirected network and their summaries.

Four local measurements (average neighbor degree, average shortest path
length, betweenness, clustering coefficient) plus the global degree
assortativity. Local values are condensed per book into mean, deviation
(denominator M-1) and skewness (third standardized moment).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

logger = logging.getLogger(__name__)

METRIC_TAGS = ("ADN", "L", "B", "CC")

METRIC_COLUMNS = (
    "adn_mean", "adn_dev", "adn_skew",
    "l_mean", "l_dev", "l_skew",
    "b_mean", "b_dev", "b_skew",
    "cc_mean", "cc_dev", "cc_skew",
    "assortativity",
)


@dataclass(frozen=True)
class NodeValues:
    tag: str
    values: np.ndarray


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    deviation: float
    skewness: float


def average_neighbor_degree(net) -> NodeValues:
    """ADN_i: mean degree over the neighbors of i; 0 for isolated nodes."""
    deg = net.degree.astype(np.float64)
    sums = np.zeros(net.n_nodes, dtype=np.float64)
    np.add.at(sums, np.repeat(np.arange(net.n_nodes), net.degree), deg[net.indices])
    with np.errstate(invalid="ignore", divide="ignore"):
        adn = np.where(deg > 0, sums / deg, 0.0)
    return NodeValues("ADN", adn)


def _ragged_neighbors(indptr, indices, nodes):
    starts = indptr[nodes]
    cnt = indptr[nodes + 1] - starts
    total = int(cnt.sum())
    if total == 0:
        return np.empty(0, dtype=indices.dtype), np.empty(0, dtype=nodes.dtype)
    offsets = np.repeat(starts - np.concatenate(([0], np.cumsum(cnt)[:-1])), cnt)
    return indices[offsets + np.arange(total)], np.repeat(nodes, cnt)


def _sssp_pass(net, source, dist, sigma):
    """BFS from one source; returns the visited frontiers by level."""
    indptr, indices = net.indptr, net.indices
    dist.fill(-1)
    sigma.fill(0.0)
    dist[source] = 0
    sigma[source] = 1.0
    levels = []
    frontier = np.array([source], dtype=np.int64)
    depth = 0
    while frontier.size:
        levels.append(frontier)
        depth += 1
        targets, origins = _ragged_neighbors(indptr, indices, frontier)
        if targets.size == 0:
            break
        fresh = targets[dist[targets] < 0]
        if fresh.size:
            fresh = np.unique(fresh)
            dist[fresh] = depth
        onward = dist[targets] == depth
        np.add.at(sigma, targets[onward], sigma[origins[onward]])
        frontier = fresh
    return levels


def shortest_path_stats(net):
    """One all-sources BFS sweep yielding (L, B) node values.

    L_i is the mean distance from i to the other nodes of its component
    (0 for singletons); B_i is the unnormalized betweenness over unordered
    pairs, computed by shortest-path dependency accumulation.
    """
    n = net.n_nodes
    indptr, indices = net.indptr, net.indices
    L = np.zeros(n, dtype=np.float64)
    B = np.zeros(n, dtype=np.float64)
    dist = np.empty(n, dtype=np.int64)
    sigma = np.empty(n, dtype=np.float64)
    delta = np.empty(n, dtype=np.float64)
    singletons = 0
    for s in range(n):
        levels = _sssp_pass(net, s, dist, sigma)
        reached = sum(f.size for f in levels) - 1
        if reached == 0:
            singletons += 1
            continue
        total = sum(d * f.size for d, f in enumerate(levels))
        L[s] = total / reached
        delta.fill(0.0)
        for d in range(len(levels) - 1, 0, -1):
            nodes = levels[d]
            coef = (1.0 + delta[nodes]) / sigma[nodes]
            targets, _ = _ragged_neighbors(indptr, indices, nodes)
            spread = np.repeat(coef, indptr[nodes + 1] - indptr[nodes])
            back = dist[targets] == d - 1
            np.add.at(delta, targets[back], sigma[targets[back]] * spread[back])
        B += delta
        B[s] -= delta[s]
    if singletons:
        logger.info("average path length: %d singleton node(s) assigned L=0", singletons)
    return NodeValues("L", L), NodeValues("B", B / 2.0)


def avg_shortest_path_length(net) -> NodeValues:
    return shortest_path_stats(net)[0]


def betweenness(net) -> NodeValues:
    return shortest_path_stats(net)[1]


def clustering_coefficient(net) -> NodeValues:
    """CC_i: fraction of neighbor pairs of i that are themselves linked."""
    n = net.n_nodes
    tri = np.zeros(n, dtype=np.int64)
    for u in range(n):
        row = net.neighbors(u)
        for v in row[row > u]:
            common = np.intersect1d(row, net.neighbors(v), assume_unique=True)
            if common.size:
                tri[common] += 1
    deg = net.degree.astype(np.float64)
    pairs = deg * (deg - 1) / 2.0
    with np.errstate(invalid="ignore", divide="ignore"):
        cc = np.where(pairs > 0, tri / pairs, 0.0)
    return NodeValues("CC", cc)


def assortativity(net) -> float | None:
    """Pearson correlation of degrees across edge endpoints.

    Every undirected edge contributes both orientations. Returns None when
    an endpoint-degree marginal has zero variance (regular graphs).
    """
    if net.n_edges == 0:
        raise ValueError("assortativity needs at least one edge")
    deg = net.degree.astype(np.float64)
    src = np.repeat(np.arange(net.n_nodes), net.degree)
    x = deg[src]
    y = deg[net.indices]
    vx = x.var()
    vy = y.var()
    if vx == 0.0 or vy == 0.0:
        return None
    cov = ((x - x.mean()) * (y - y.mean())).mean()
    return float(cov / np.sqrt(vx * vy))


def summarize(values) -> SummaryStats:
    """Mean, deviation (M-1 denominator) and skewness of node values.

    Skewness uses the population third moment of standardized values and is
    0 by convention when the deviation is 0.
    """
    x = np.asarray(getattr(values, "values", values), dtype=np.float64)
    m = x.size
    if m < 2:
        raise ValueError(f"summarize needs at least 2 values, got {m}")
    mean = float(x.mean())
    dev = float(np.sqrt(((x - mean) ** 2).sum() / (m - 1)))
    if dev == 0.0:
        return SummaryStats(mean, 0.0, 0.0)
    skew = float((((x - mean) / dev) ** 3).mean())
    return SummaryStats(mean, dev, skew)


def giant_component_fraction(net) -> float:
    """Share of nodes in the largest connected component."""
    n = net.n_nodes
    if n == 0:
        return 0.0
    seen = np.zeros(n, dtype=bool)
    best = 0
    for s in range(n):
        if seen[s]:
            continue
        comp = 1
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for v in net.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp += 1
                    stack.append(int(v))
        best = max(best, comp)
    return best / n


def book_metrics(net) -> dict[str, float | None]:
    """All METRIC_COLUMNS values for one book network."""
    L, B = shortest_path_stats(net)
    row: dict[str, float | None] = {}
    for tag, nv in (
        ("adn", average_neighbor_degree(net)),
        ("l", L),
        ("b", B),
        ("cc", clustering_coefficient(net)),
    ):
        stats = summarize(nv)
        row[f"{tag}_mean"] = stats.mean
        row[f"{tag}_dev"] = stats.deviation
        row[f"{tag}_skew"] = stats.skewness
    row["assortativity"] = assortativity(net) if net.n_edges else None
    return row
