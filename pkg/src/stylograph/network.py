"""Word co-occurrence networks.

Nodes are distinct words; a directed edge u -> v exists when the word u is
immediately followed by v somewhere in the token stream. Edges are
unweighted and duplicates collapse. Node indices follow first occurrence in
the stream, so rebuilding from the same stream is reproducible.
"""

from __future__ import annotations

import numpy as np


class DirectedNetwork:
    """Unweighted digraph over an indexed vocabulary.

    Self-loops (immediate word repetition) are stored but excluded from the
    undirected view and from the motif census.
    """

    def __init__(self, node_word, out_adj, in_adj):
        self.node_word = tuple(node_word)
        self.word_node = {w: i for i, w in enumerate(self.node_word)}
        self.out_adj = [frozenset(s) for s in out_adj]
        self.in_adj = [frozenset(s) for s in in_adj]
        self._edge_keys = None
        self._skeleton = None

    @property
    def n_nodes(self) -> int:
        return len(self.node_word)

    @property
    def n_edges(self) -> int:
        return sum(len(s) for s in self.out_adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.out_adj[u]

    def edges(self):
        for u, succ in enumerate(self.out_adj):
            for v in sorted(succ):
                yield u, v

    @classmethod
    def from_edges(cls, edges, n_nodes: int | None = None, words=None) -> "DirectedNetwork":
        """Build from (u, v) index pairs; mostly for tests and random graphs."""
        edges = list(edges)
        if words is None:
            if n_nodes is None:
                n_nodes = 1 + max((max(u, v) for u, v in edges), default=-1)
            words = [f"w{i}" for i in range(n_nodes)]
        n = len(words)
        out_adj = [set() for _ in range(n)]
        in_adj = [set() for _ in range(n)]
        for u, v in edges:
            out_adj[u].add(v)
            in_adj[v].add(u)
        return cls(words, out_adj, in_adj)

    def edge_keys(self) -> np.ndarray:
        """Sorted int64 keys u*n+v of the non-loop directed edges."""
        if self._edge_keys is None:
            n = self.n_nodes
            keys = [u * n + v for u, succ in enumerate(self.out_adj) for v in succ if v != u]
            self._edge_keys = np.array(sorted(keys), dtype=np.int64)
        return self._edge_keys

    def skeleton(self) -> "UndirectedNetwork":
        if self._skeleton is None:
            self._skeleton = to_undirected(self)
        return self._skeleton


class UndirectedNetwork:
    """Symmetric, loop-free view stored in CSR form with sorted rows."""

    def __init__(self, node_word, indptr: np.ndarray, indices: np.ndarray):
        self.node_word = tuple(node_word)
        self.indptr = indptr
        self.indices = indices
        self.degree = np.diff(indptr)

    @property
    def n_nodes(self) -> int:
        return len(self.node_word)

    @property
    def n_edges(self) -> int:
        return int(self.indices.size // 2)

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]: self.indptr[i + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        k = np.searchsorted(row, v)
        return k < row.size and row[k] == v

    def edges(self):
        for u in range(self.n_nodes):
            for v in self.neighbors(u):
                if u < v:
                    yield u, int(v)

    @classmethod
    def from_edges(cls, edges, n_nodes: int | None = None, words=None) -> "UndirectedNetwork":
        edges = list(edges)
        if words is None:
            if n_nodes is None:
                n_nodes = 1 + max((max(u, v) for u, v in edges), default=-1)
            words = [f"w{i}" for i in range(n_nodes)]
        n = len(words)
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return cls._from_sets(words, adj)

    @classmethod
    def _from_sets(cls, words, adj) -> "UndirectedNetwork":
        n = len(adj)
        indptr = np.zeros(n + 1, dtype=np.int64)
        for i, s in enumerate(adj):
            indptr[i + 1] = indptr[i] + len(s)
        indices = np.empty(indptr[-1], dtype=np.int64)
        for i, s in enumerate(adj):
            indices[indptr[i]: indptr[i + 1]] = sorted(s)
        return cls(words, indptr, indices)


def build_network(stream) -> DirectedNetwork:
    """Directed co-occurrence network of a token stream.

    One node per distinct token; an edge for every ordered adjacent pair,
    left word pointing to right word.
    """
    tokens = stream.tokens if hasattr(stream, "tokens") else tuple(stream)
    if not tokens:
        raise ValueError("cannot build a network from an empty stream")
    word_node = {}
    node_word = []
    idx = []
    for tok in tokens:
        i = word_node.get(tok)
        if i is None:
            i = len(node_word)
            word_node[tok] = i
            node_word.append(tok)
        idx.append(i)
    out_adj = [set() for _ in node_word]
    in_adj = [set() for _ in node_word]
    for a, b in zip(idx, idx[1:]):
        out_adj[a].add(b)
        in_adj[b].add(a)
    return DirectedNetwork(node_word, out_adj, in_adj)


def to_undirected(net: DirectedNetwork) -> UndirectedNetwork:
    """Symmetrize: {i,j} is an edge iff i->j or j->i, self-loops dropped."""
    adj = [set() for _ in range(net.n_nodes)]
    for u, succ in enumerate(net.out_adj):
        for v in succ:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
    return UndirectedNetwork._from_sets(net.node_word, adj)


def write_edgelist(net: DirectedNetwork, path, scenario: str = "") -> None:
    """Export as `source_word<TAB>target_word` lines under a summary header."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# nodes={net.n_nodes} edges={net.n_edges} scenario={scenario}\n")
        for u, v in net.edges():
            fh.write(f"{net.node_word[u]}\t{net.node_word[v]}\n")
