import numpy as np
import pytest

from stylograph.metrics import (
    assortativity,
    average_neighbor_degree,
    avg_shortest_path_length,
    betweenness,
    book_metrics,
    clustering_coefficient,
    giant_component_fraction,
    shortest_path_stats,
    summarize,
)
from stylograph.network import UndirectedNetwork

# ----------------------------------------------------------------- oracle
# Betweenness by explicit shortest-path enumeration: BFS distances, then a
# depth-first expansion of every shortest path through the predecessor DAG.


def _bfs_dist(net, s):
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for v in net.neighbors(u):
                v = int(v)
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def _all_shortest_paths(net, s, t, dist):
    if t not in dist:
        return []
    paths = []
    stack = [(t, [t])]
    while stack:
        v, tail = stack.pop()
        if v == s:
            paths.append(tail[::-1])
            continue
        for u in net.neighbors(v):
            u = int(u)
            if dist.get(u) == dist[v] - 1:
                stack.append((u, tail + [u]))
    return paths


def bruteforce_betweenness(net):
    n = net.n_nodes
    B = np.zeros(n)
    for s in range(n):
        dist = _bfs_dist(net, s)
        for t in range(s + 1, n):
            paths = _all_shortest_paths(net, s, t, dist)
            if not paths:
                continue
            for path in paths:
                for v in path[1:-1]:
                    B[v] += 1.0 / len(paths)
    return B


def _random_undirected(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return UndirectedNetwork.from_edges(edges, n_nodes=n)


P3 = UndirectedNetwork.from_edges([(0, 1), (1, 2)])
P4 = UndirectedNetwork.from_edges([(0, 1), (1, 2), (2, 3)])
C4 = UndirectedNetwork.from_edges([(0, 1), (1, 2), (2, 3), (3, 0)])
STAR4 = UndirectedNetwork.from_edges([(0, 1), (0, 2), (0, 3), (0, 4)])
TRIANGLE = UndirectedNetwork.from_edges([(0, 1), (1, 2), (0, 2)])
K4 = UndirectedNetwork.from_edges([(a, b) for a in range(4) for b in range(a + 1, 4)])


def test_adn_hand_values():
    assert list(average_neighbor_degree(STAR4).values) == [1.0, 4.0, 4.0, 4.0, 4.0]
    assert list(average_neighbor_degree(TRIANGLE).values) == [2.0, 2.0, 2.0]
    assert list(average_neighbor_degree(P3).values) == [2.0, 1.0, 2.0]


def test_adn_isolated_zero():
    net = UndirectedNetwork.from_edges([(0, 1)], n_nodes=3)
    assert average_neighbor_degree(net).values[2] == 0.0


def test_l_hand_values():
    assert list(avg_shortest_path_length(P3).values) == [1.5, 1.0, 1.5]
    assert list(avg_shortest_path_length(K4).values) == [1.0] * 4
    two = UndirectedNetwork.from_edges([(0, 1), (2, 3)])
    assert list(avg_shortest_path_length(two).values) == [1.0] * 4


def test_l_singleton_zero():
    net = UndirectedNetwork.from_edges([(0, 1)], n_nodes=3)
    assert avg_shortest_path_length(net).values[2] == 0.0


def test_betweenness_hand_values():
    assert list(betweenness(P3).values) == [0.0, 1.0, 0.0]
    assert list(betweenness(STAR4).values) == [6.0, 0.0, 0.0, 0.0, 0.0]
    assert np.allclose(betweenness(C4).values, 0.5)


def test_betweenness_matches_bruteforce():
    rng = np.random.default_rng(5)
    for n, p in [(8, 0.3), (14, 0.2), (20, 0.15), (30, 0.1), (12, 0.5)]:
        for _ in range(3):
            net = _random_undirected(rng, n, p)
            fast = betweenness(net).values
            assert np.allclose(fast, bruteforce_betweenness(net), atol=1e-9)


def test_betweenness_total_equals_interior_mass():
    # sum of B over nodes == sum over connected pairs of (distance - 1)
    rng = np.random.default_rng(8)
    for _ in range(5):
        net = _random_undirected(rng, 18, 0.2)
        total = 0.0
        for s in range(net.n_nodes):
            dist = _bfs_dist(net, s)
            total += sum(d - 1 for t, d in dist.items() if t > s and d >= 1)
        assert betweenness(net).values.sum() == pytest.approx(total, abs=1e-9)


def test_clustering_hand_values():
    assert list(clustering_coefficient(TRIANGLE).values) == [1.0, 1.0, 1.0]
    assert clustering_coefficient(P3).values[1] == 0.0
    assert list(clustering_coefficient(K4).values) == [1.0] * 4


def test_clustering_low_degree_zero():
    assert list(clustering_coefficient(P3).values) == [0.0, 0.0, 0.0]


def test_relabel_invariance_adn_cc():
    rng = np.random.default_rng(12)
    edges = [(u, v) for u in range(12) for v in range(u + 1, 12) if rng.random() < 0.3]
    net = UndirectedNetwork.from_edges(edges, n_nodes=12)
    perm = rng.permutation(12)
    relabeled = UndirectedNetwork.from_edges([(perm[u], perm[v]) for u, v in edges], n_nodes=12)
    assert np.allclose(np.sort(average_neighbor_degree(net).values),
                       np.sort(average_neighbor_degree(relabeled).values))
    assert np.allclose(np.sort(clustering_coefficient(net).values),
                       np.sort(clustering_coefficient(relabeled).values))


def test_assortativity_path4():
    assert assortativity(P4) == pytest.approx(-0.5, abs=1e-12)


def test_assortativity_regular_undefined():
    assert assortativity(C4) is None
    assert assortativity(K4) is None


def test_assortativity_edgeless_raises():
    net = UndirectedNetwork.from_edges([], n_nodes=3)
    with pytest.raises(ValueError):
        assortativity(net)


def test_summarize_symmetric():
    stats = summarize(np.array([1.0, 2.0, 3.0]))
    assert (stats.mean, stats.deviation, stats.skewness) == (2.0, 1.0, 0.0)


def test_summarize_constant_convention():
    stats = summarize(np.array([5.0, 5.0, 5.0, 5.0]))
    assert (stats.mean, stats.deviation, stats.skewness) == (5.0, 0.0, 0.0)


def test_summarize_skewed_pinned():
    x = np.array([0.0, 0.0, 0.0, 4.0])
    stats = summarize(x)
    # recompute from the definitions
    mean = x.sum() / 4
    dev = np.sqrt(((x - mean) ** 2).sum() / 3)
    skew = (((x - mean) / dev) ** 3).mean()
    assert stats.mean == mean == 1.0
    assert stats.deviation == dev == 2.0
    assert stats.skewness == pytest.approx(skew) and skew == pytest.approx(0.75)


def test_summarize_needs_two():
    with pytest.raises(ValueError):
        summarize(np.array([1.0]))


def test_summarize_affine_law():
    rng = np.random.default_rng(77)
    x = rng.normal(size=40)
    base = summarize(x)
    for a, b in [(2.5, 1.0), (-3.0, 4.0)]:
        moved = summarize(a * x + b)
        assert moved.mean == pytest.approx(a * base.mean + b, rel=1e-12)
        assert moved.deviation == pytest.approx(abs(a) * base.deviation, rel=1e-12)
        assert moved.skewness == pytest.approx(np.sign(a) * base.skewness, rel=1e-9)


def test_shortest_path_stats_consistent_with_public_ops():
    rng = np.random.default_rng(4)
    net = _random_undirected(rng, 15, 0.25)
    L, B = shortest_path_stats(net)
    assert np.allclose(L.values, avg_shortest_path_length(net).values)
    assert np.allclose(B.values, betweenness(net).values)


def test_giant_component_fraction():
    net = UndirectedNetwork.from_edges([(0, 1), (1, 2), (3, 4)], n_nodes=6)
    assert giant_component_fraction(net) == pytest.approx(0.5)


def test_book_metrics_row_shape():
    row = book_metrics(P4)
    assert set(row) == {
        "adn_mean", "adn_dev", "adn_skew", "l_mean", "l_dev", "l_skew",
        "b_mean", "b_dev", "b_skew", "cc_mean", "cc_dev", "cc_skew",
        "assortativity",
    }
    assert row["assortativity"] == pytest.approx(-0.5)
    assert row["b_mean"] == pytest.approx(np.mean([0.0, 2.0, 2.0, 0.0]))
