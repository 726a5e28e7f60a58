"""Deterministic synthetic corpus: 8 writers, 5 books each.

The generator plants the author signal in function-word behaviour only:
each writer has a private tilt over the stopword inventory and private
stopword transition rates, while content words come from one shared
Zipf-distributed lexicon. Networks built with stopwords present therefore
separate the writers, and the separation collapses once stopwords are
removed; word-frequency features separate them as well.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import corpus
from .preprocess import STOPWORDS

SURROGATE_AUTHORS = (
    "Arnett", "Bellamy", "Calder", "Deverell",
    "Ellison", "Fairburn", "Grantham", "Holloway",
)

_ONSETS = ("b", "br", "c", "cl", "d", "dr", "f", "fl", "g", "gr", "h", "j",
           "k", "l", "m", "n", "p", "pr", "qu", "r", "sp", "st", "tr", "v", "w", "y")
_NUCLEI = ("a", "e", "i", "o", "u", "ai", "ea", "ou", "ar", "el", "on", "ir")
_CODAS = ("", "n", "r", "t", "l", "m", "nd", "st", "ck", "sh")


def _content_lexicon(size: int = 1400) -> list[str]:
    words = []
    seen = set(STOPWORDS)
    for o, nuc, c in itertools.product(_ONSETS, _NUCLEI, _CODAS):
        w = o + nuc + c
        if len(w) >= 3 and w not in seen:
            seen.add(w)
            words.append(w)
        if len(words) == size:
            break
    return words


@dataclass(frozen=True)
class _AuthorStyle:
    stop_weights: np.ndarray  # distribution over STOPWORDS
    p_stop: float  # P(stopword | after content word)
    q_chain: float  # P(stopword | after stopword)


def _author_styles(rng, n_authors: int):
    base = 1.0 / np.arange(3, 3 + len(STOPWORDS)) ** 0.85
    styles = []
    for a in range(n_authors):
        tilt = np.exp(1.1 * rng.normal(0.0, 1.0, size=len(STOPWORDS)))
        w = base * tilt
        styles.append(
            _AuthorStyle(
                stop_weights=w / w.sum(),
                p_stop=0.34 + 0.028 * a,
                q_chain=float(rng.uniform(0.18, 0.42)),
            )
        )
    return styles


def _book_tokens(rng, style: _AuthorStyle, content_p: np.ndarray, n_tokens: int):
    n_stop = len(STOPWORDS)
    n_content = content_p.size
    tokens = []
    after_stop = False
    while len(tokens) < n_tokens:
        chain = style.q_chain if after_stop else style.p_stop
        if rng.random() < chain:
            tokens.append(STOPWORDS[rng.choice(n_stop, p=style.stop_weights)])
            after_stop = True
        else:
            tokens.append(_LEXICON[rng.choice(n_content, p=content_p)])
            after_stop = False
    return tokens


def _format_text(rng, tokens) -> str:
    paragraphs = []
    sentences = []
    i = 0
    while i < len(tokens):
        length = int(rng.integers(6, 19))
        chunk = tokens[i: i + length]
        i += length
        words = [chunk[0].capitalize()]
        for w in chunk[1:]:
            if rng.random() < 0.06:
                words[-1] += ","
            words.append(w)
        closer = "." if rng.random() < 0.9 else ("!" if rng.random() < 0.5 else "?")
        sentences.append(" ".join(words) + closer)
        if len(sentences) >= int(rng.integers(4, 9)):
            paragraphs.append(" ".join(sentences))
            sentences = []
    if sentences:
        paragraphs.append(" ".join(sentences))
    return "\n\n".join(paragraphs) + "\n"


_LEXICON = np.array(_content_lexicon())


def generate_surrogate_corpus(out_dir, seed: int = 7, n_authors: int = 8,
                              books_per_author: int = 5,
                              approx_tokens: int = 3200) -> Path:
    """Write the synthetic corpus and return the path of its manifest."""
    out_dir = Path(out_dir)
    (out_dir / "books").mkdir(parents=True, exist_ok=True)
    master = np.random.default_rng(np.random.SeedSequence(seed))
    styles = _author_styles(master, n_authors)
    content_p = 1.0 / np.arange(4, 4 + _LEXICON.size) ** 1.05
    content_p /= content_p.sum()

    records = []
    for a in range(n_authors):
        author = SURROGATE_AUTHORS[a % len(SURROGATE_AUTHORS)]
        if a >= len(SURROGATE_AUTHORS):
            author = f"{author} {a // len(SURROGATE_AUTHORS) + 1}"
        for b in range(books_per_author):
            rng = np.random.default_rng(np.random.SeedSequence((seed, a, b)))
            n_tokens = approx_tokens + int(rng.integers(0, 300))
            text = _format_text(rng, _book_tokens(rng, styles[a], content_p, n_tokens))
            rel = f"books/{author.lower()}_{b + 1}.txt"
            (out_dir / rel).write_text(text, encoding="utf-8")
            records.append(
                corpus.BookRecord(author, f"{author} No. {b + 1}", 1880 + a * 5 + b,
                                  rel, (out_dir / rel).resolve())
            )
    manifest_path = out_dir / "manifest.csv"
    corpus.save_manifest(corpus.CorpusManifest(tuple(records)), manifest_path)
    return manifest_path
