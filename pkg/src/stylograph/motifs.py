"""Census of the 13 connected directed 3-node subgraph types.

A triad's adjacency matrix M is encoded row-major into a 9-bit code with
bit weight 2**(9 - (3*(i-1)+j)) for entry M[i][j] (1-based indices, zero
diagonal). The canonical id of a triad is the minimum code over the six
node relabelings; exactly 13 canonical ids exist for weakly connected
triads, and motif labels 1..13 follow ascending canonical id.

The fast census enumerates each connected triple once from its
minimum-index node over the undirected skeleton, classifying triples in
bulk with numpy; the brute-force oracle checks all C(n,3) triples and is
meant for tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

_DIAGONAL_MASK = 256 + 16 + 1  # codes with any of these bits set are invalid

# Bit order of a 6-bit edge pattern for the node triple (u, v, w), used by
# the bulk classifier: (u->v, v->u, u->w, w->u, v->w, w->v).
_PATTERN_EDGES = ((0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1))

_CHUNK = 1 << 21  # triples classified per numpy batch


def _matrix_code(M) -> int:
    code = 0
    pos = 0
    for i in range(3):
        for j in range(3):
            pos += 1
            if M[i][j]:
                code |= 1 << (9 - pos)
    return code


def _pattern_matrix(pattern: int):
    M = [[0] * 3 for _ in range(3)]
    for bit, (i, j) in enumerate(_PATTERN_EDGES):
        if pattern >> bit & 1:
            M[i][j] = 1
    return M


def _canonical_code(M) -> int:
    best = None
    for perm in itertools.permutations(range(3)):
        code = _matrix_code(
            [[M[i][j] for j in sorted(range(3), key=perm.__getitem__)]
             for i in sorted(range(3), key=perm.__getitem__)]
        )
        if best is None or code < best:
            best = code
    return best


def _pattern_connected(pattern: int) -> bool:
    uv = pattern & 0b000011
    uw = pattern & 0b001100
    vw = pattern & 0b110000
    return (bool(uv) + bool(uw) + bool(vw)) >= 2


def _build_tables():
    ids = set()
    canonical_of_pattern = np.full(64, -1, dtype=np.int64)
    for pattern in range(64):
        if not _pattern_connected(pattern):
            continue
        cid = _canonical_code(_pattern_matrix(pattern))
        ids.add(cid)
        canonical_of_pattern[pattern] = cid
    ordered = tuple(sorted(ids))
    label_of_pattern = np.full(64, -1, dtype=np.int64)
    for pattern in range(64):
        cid = canonical_of_pattern[pattern]
        if cid >= 0:
            label_of_pattern[pattern] = ordered.index(cid)
    return ordered, label_of_pattern


#: The 13 canonical ids in ascending order; index + 1 is the motif label.
MOTIF_CANONICAL_IDS, _LABEL_OF_PATTERN = _build_tables()

MOTIF_FEATURE_NAMES = tuple(f"m{k}" for k in range(1, 14))


@dataclass(frozen=True)
class MotifType:
    label: int  # 1..13, ascending canonical id
    canonical_id: int


MOTIF_TYPES = tuple(MotifType(k + 1, cid) for k, cid in enumerate(MOTIF_CANONICAL_IDS))


def decode_edges(code: int) -> tuple[tuple[int, int], ...]:
    """Directed edges (i, j), 1-based, present in a 9-bit triad code."""
    edges = []
    pos = 0
    for i in range(1, 4):
        for j in range(1, 4):
            pos += 1
            if code >> (9 - pos) & 1:
                edges.append((i, j))
    return tuple(edges)


@lru_cache(maxsize=512)
def canonical_triad_id(code: int) -> MotifType:
    """Classify a triad code into its motif type.

    Raises ValueError for codes outside [0, 512), codes with diagonal bits
    set, and weakly disconnected triads ("not a motif").
    """
    if not 0 <= code < 512:
        raise ValueError(f"triad code {code} out of range")
    if code & _DIAGONAL_MASK:
        raise ValueError(f"triad code {code} has diagonal bits set")
    edges = decode_edges(code)
    touched = {i for e in edges for i in e}
    pairs = {frozenset(e) for e in edges}
    if len(touched) < 3 or len(pairs) < 2:
        raise ValueError(f"triad code {code} is not weakly connected: not a motif")
    cid = _canonical_code([[1 if (i + 1, j + 1) in edges else 0 for j in range(3)] for i in range(3)])
    return MOTIF_TYPES[MOTIF_CANONICAL_IDS.index(cid)]


@dataclass(frozen=True)
class MotifCensus:
    """Absolute counts of the 13 motif types, indexed by label order."""

    counts: tuple[int, ...]
    book_id: str = ""
    scenario: str = ""

    def __post_init__(self):
        if len(self.counts) != 13:
            raise ValueError("a census has exactly 13 counts")

    @property
    def total(self) -> int:
        return sum(self.counts)


def _edge_present(keys: np.ndarray, query: np.ndarray) -> np.ndarray:
    if keys.size == 0:
        return np.zeros(query.shape, dtype=np.int64)
    pos = np.searchsorted(keys, query)
    pos[pos == keys.size] = keys.size - 1
    return (keys[pos] == query).astype(np.int64)


def _classify_into(counts, keys, n, U, V, W):
    pattern = _edge_present(keys, U * n + V)
    pattern |= _edge_present(keys, V * n + U) << 1
    pattern |= _edge_present(keys, U * n + W) << 2
    pattern |= _edge_present(keys, W * n + U) << 3
    pattern |= _edge_present(keys, V * n + W) << 4
    pattern |= _edge_present(keys, W * n + V) << 5
    labels = _LABEL_OF_PATTERN[pattern]
    counts += np.bincount(labels, minlength=13)


def triad_census(net, book_id: str = "", scenario: str = "") -> MotifCensus:
    """Exact motif counts over all weakly connected node triples.

    Each triple is enumerated once from its minimum-index node: pairs of
    its skeleton neighbors cover triples where that node touches both
    others, and neighbor-of-neighbor walks cover the open paths it starts.
    Self-loops are ignored. Networks with fewer than 3 nodes yield zeros.
    """
    n = net.n_nodes
    counts = np.zeros(13, dtype=np.int64)
    if n >= 3:
        sk = net.skeleton()
        indptr, indices = sk.indptr, sk.indices
        keys = net.edge_keys()
        in_row = np.zeros(n, dtype=bool)
        for u in range(n):
            row = indices[indptr[u]: indptr[u + 1]]
            if row.size == 0:
                continue
            hi = row[np.searchsorted(row, u + 1):]
            h = hi.size
            # pairs of higher neighbors of u, blockwise to bound memory
            if h >= 2:
                i0 = 0
                while i0 < h - 1:
                    i1 = i0 + 1
                    budget = h - 1 - i0
                    while i1 < h - 1 and budget + (h - 1 - i1) <= _CHUNK:
                        budget += h - 1 - i1
                        i1 += 1
                    V = np.repeat(hi[i0:i1], np.arange(h - 1 - i0, h - 1 - i1, -1))
                    W = np.concatenate([hi[i + 1:] for i in range(i0, i1)])
                    _classify_into(counts, keys, n, np.full(V.size, u, dtype=np.int64), V, W)
                    i0 = i1
            # open paths u - v - w with w beyond u's neighborhood
            if h:
                cnt = indptr[hi + 1] - indptr[hi]
                total = int(cnt.sum())
                if total:
                    offsets = np.repeat(
                        indptr[hi] - np.concatenate(([0], np.cumsum(cnt)[:-1])), cnt
                    )
                    flat = indices[offsets + np.arange(total)]
                    V = np.repeat(hi, cnt)
                    in_row[row] = True
                    keep = (flat > u) & ~in_row[flat]
                    in_row[row] = False
                    if keep.any():
                        V, W = V[keep], flat[keep]
                        _classify_into(counts, keys, n, np.full(V.size, u, dtype=np.int64), V, W)
    return MotifCensus(tuple(int(c) for c in counts), book_id, scenario)


def census_equivalence_oracle(net, book_id: str = "", scenario: str = "") -> MotifCensus:
    """Reference census: classify every one of the C(n,3) triples directly.

    Cubic in node count, hence restricted to networks with <= 200 nodes.
    """
    n = net.n_nodes
    if n > 200:
        raise ValueError(f"oracle limited to 200 nodes, network has {n}")
    out = net.out_adj
    counts = [0] * 13
    for a, b, c in itertools.combinations(range(n), 3):
        ab = b in out[a]
        ba = a in out[b]
        ac = c in out[a]
        ca = a in out[c]
        bc = c in out[b]
        cb = b in out[c]
        if ((ab or ba) + (ac or ca) + (bc or cb)) < 2:
            continue
        code = ab * 128 + ac * 64 + ba * 32 + bc * 8 + ca * 4 + cb * 2
        counts[canonical_triad_id(code).label - 1] += 1
    return MotifCensus(tuple(counts), book_id, scenario)


def connected_triple_count(net) -> int:
    """Count weakly connected triples without classifying them.

    Uses the path-center identity: sum over nodes of C(degree, 2) counts
    every open triple once and every triangle three times.
    """
    sk = net.skeleton()
    deg = sk.degree.astype(np.int64)
    centered = int((deg * (deg - 1) // 2).sum())
    tri3 = 0
    for u in range(sk.n_nodes):
        row = sk.neighbors(u)
        for v in row[row > u]:
            tri3 += np.intersect1d(row, sk.neighbors(v), assume_unique=True).size
    # each triangle contributes one common neighbor per edge
    return centered - 2 * (tri3 // 3)


def write_census_csv(censuses, path, provenance: str = "") -> None:
    """Rows `book,scenario,m1..m13`, motif columns in ascending canonical id."""
    import csv

    with open(path, "w", encoding="utf-8", newline="") as fh:
        if provenance:
            fh.write(f"# provenance: {provenance}\n")
        writer = csv.writer(fh)
        writer.writerow(["book", "scenario", *MOTIF_FEATURE_NAMES])
        for census in censuses:
            writer.writerow([census.book_id, census.scenario, *census.counts])


def write_motif_table(path) -> None:
    """Sidecar mapping: label, canonical id, and the canonical edge set."""
    import csv

    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label", "canonical_id", "edges"])
        for mt in MOTIF_TYPES:
            edges = " ".join(f"{i}->{j}" for i, j in decode_edges(mt.canonical_id))
            writer.writerow([f"m{mt.label}", mt.canonical_id, edges])
