import numpy as np
import pytest

from stylograph.network import (
    DirectedNetwork,
    UndirectedNetwork,
    build_network,
    to_undirected,
    write_edgelist,
)
from stylograph.preprocess import TokenStream, tokenize

FIG1 = tokenize(
    "three men wait door say holmes oh indeed seem do thing "
    "completely must compliment holmes answer"
)


def test_fig1_counts():
    net = build_network(FIG1)
    # independent derivation from the token stream itself
    assert net.n_nodes == len(set(FIG1)) == 15
    pairs = set(zip(FIG1, FIG1[1:]))
    assert net.n_edges == len(pairs) == 15
    und = to_undirected(net)
    unordered = {frozenset(p) for p in pairs if len(set(p)) == 2}
    assert und.n_edges == len(unordered) == 15


def test_fig1_edges_follow_reading_order():
    net = build_network(FIG1)
    w = net.word_node
    assert net.has_edge(w["three"], w["men"])
    assert net.has_edge(w["compliment"], w["holmes"])
    assert net.has_edge(w["holmes"], w["answer"])
    assert not net.has_edge(w["men"], w["three"])


def test_duplicate_pairs_collapse():
    net = build_network(["a", "b", "a", "b"])
    assert net.n_nodes == 2
    assert net.n_edges == 2
    assert net.has_edge(0, 1) and net.has_edge(1, 0)
    assert to_undirected(net).n_edges == 1


def test_single_token():
    net = build_network(["a"])
    assert net.n_nodes == 1
    assert net.n_edges == 0


def test_empty_stream_rejected():
    with pytest.raises(ValueError):
        build_network([])


def test_self_loop_stored_but_dropped_undirected():
    net = build_network(["had", "had"])
    assert net.n_edges == 1
    assert net.has_edge(0, 0)
    und = to_undirected(net)
    assert und.n_edges == 0
    assert und.degree[0] == 0


def test_first_occurrence_indexing():
    net = build_network(["b", "a", "b", "c"])
    assert net.node_word == ("b", "a", "c")
    again = build_network(["b", "a", "b", "c"])
    assert again.node_word == net.node_word
    assert [sorted(s) for s in again.out_adj] == [sorted(s) for s in net.out_adj]


def test_stream_bounds_random():
    rng = np.random.default_rng(3)
    for _ in range(20):
        toks = [f"w{i}" for i in rng.integers(0, 12, size=rng.integers(1, 60))]
        net = build_network(toks)
        assert net.n_nodes <= len(toks)
        assert net.n_edges <= len(toks) - 1 if len(toks) > 1 else net.n_edges == 0
        und = to_undirected(net)
        assert und.n_edges <= net.n_edges


def test_undirected_symmetry_and_merge():
    net = DirectedNetwork.from_edges([(0, 1), (1, 0), (1, 2)], n_nodes=3)
    und = to_undirected(net)
    assert und.n_edges == 2
    assert und.has_edge(0, 1) and und.has_edge(1, 0)
    assert list(und.neighbors(1)) == [0, 2]


def test_undirected_equality_iff_no_reciprocal_or_loop():
    no_recip = DirectedNetwork.from_edges([(0, 1), (1, 2), (2, 0)], n_nodes=3)
    assert to_undirected(no_recip).n_edges == no_recip.n_edges
    with_loop = DirectedNetwork.from_edges([(0, 0), (0, 1)], n_nodes=2)
    assert to_undirected(with_loop).n_edges == with_loop.n_edges - 1


def test_token_stream_network_roundtrip():
    stream = TokenStream(tuple(FIG1), "fig1", "original")
    net = build_network(stream)
    assert net.n_nodes == 15


def test_write_edgelist(tmp_path):
    net = build_network(["a", "b", "c", "a", "b"])
    path = tmp_path / "net.tsv"
    write_edgelist(net, path, scenario="original")
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == f"# nodes=3 edges={net.n_edges} scenario=original"
    assert "a\tb" in lines[1:]
    assert len(lines) == 1 + net.n_edges


def test_undirected_from_edges_constructor():
    und = UndirectedNetwork.from_edges([(0, 1), (1, 2), (2, 2)])
    assert und.n_nodes == 3
    assert und.n_edges == 2  # self-loop dropped
    assert list(und.degree) == [1, 2, 1]
