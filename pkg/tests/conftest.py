import csv

import numpy as np
import pytest

from stylograph.network import DirectedNetwork
from stylograph.surrogate import generate_surrogate_corpus


def random_digraph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return DirectedNetwork.from_edges(edges, n_nodes=n)


def write_corpus(root, books):
    """books: list of (author, title, text); returns the manifest path."""
    (root / "books").mkdir(exist_ok=True)
    rows = []
    for i, (author, title, text) in enumerate(books):
        rel = f"books/b{i}.txt"
        (root / rel).write_text(text, encoding="utf-8")
        rows.append([author, title, 1900 + i, rel])
    manifest = root / "manifest.csv"
    with open(manifest, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["author", "title", "year", "path"])
        writer.writerows(rows)
    return manifest


def _mini_text(rng, n_tokens):
    vocab = ["river", "stone", "lantern", "dream", "garden", "voice", "storm",
             "the", "and", "of", "a", "to", "in", "was", "walks", "fades"]
    words = [vocab[i] for i in rng.integers(0, len(vocab), size=n_tokens)]
    return " ".join(words) + "."


@pytest.fixture
def mini_manifest(tmp_path):
    rng = np.random.default_rng(11)
    books = [
        ("North", "North One", _mini_text(rng, 400)),
        ("North", "North Two", _mini_text(rng, 430)),
        ("South", "South One", _mini_text(rng, 410)),
        ("South", "South Two", _mini_text(rng, 390)),
    ]
    return write_corpus(tmp_path, books)


@pytest.fixture(scope="session")
def surrogate_manifest(tmp_path_factory):
    out = tmp_path_factory.mktemp("surrogate")
    return generate_surrogate_corpus(out, seed=7)
