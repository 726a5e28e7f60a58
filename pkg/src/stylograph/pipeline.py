"""End-to-end plumbing: manifest -> streams -> networks -> feature matrices."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from . import corpus, learn, metrics, motifs, network, preprocess
from .errors import DataError

logger = logging.getLogger(__name__)

FEATURE_SETS = ("motifs", "netstats", "topwords")


@dataclass(frozen=True)
class ScenarioData:
    """Truncated streams and their networks for one preprocessing scenario."""

    scenario: str
    records: tuple
    streams: tuple
    networks: tuple
    target_length: int

    @property
    def authors(self) -> tuple[str, ...]:
        return tuple(r.author for r in self.records)


def prepare_streams(manifest, scenario, stops=None, lemmatizer=None):
    """Read, strip, preprocess and truncate every book of the manifest."""
    streams = []
    for rec in manifest.records:
        raw = corpus.read_book(rec)
        text = corpus.strip_boilerplate(raw)
        stream = preprocess.apply_scenario(text, scenario, stops, lemmatizer, book_id=rec.book_id)
        if not stream.tokens:
            raise DataError(f"book {rec.book_id!r} has no tokens under scenario {scenario!r}")
        streams.append(stream)
    streams, policy = corpus.truncate_corpus(streams)
    logger.info("scenario %s: truncation length %d tokens", scenario, policy.target_length)
    return streams, policy.target_length


def scenario_networks(manifest, scenario, stops=None, lemmatizer=None) -> ScenarioData:
    streams, target = prepare_streams(manifest, scenario, stops, lemmatizer)
    nets = tuple(network.build_network(s) for s in streams)
    return ScenarioData(scenario, tuple(manifest.records), tuple(streams), nets, target)


def motif_censuses(data: ScenarioData):
    return [
        motifs.triad_census(net, book_id=rec.book_id, scenario=data.scenario)
        for rec, net in zip(data.records, data.networks)
    ]


def motif_matrix(data: ScenarioData, censuses=None) -> learn.FeatureMatrix:
    censuses = censuses or motif_censuses(data)
    rows = []
    for rec, census in zip(data.records, censuses):
        fv = learn.motif_features(census)
        rows.append(learn.FeatureVector(fv.values, fv.feature_names, rec.book_id, rec.author))
    return learn.FeatureMatrix(tuple(rows)).validate()


def netstats_rows(data: ScenarioData):
    """Per-book metric dicts, in manifest order."""
    rows = []
    for rec, net in zip(data.records, data.networks):
        und = net.skeleton()
        giant = metrics.giant_component_fraction(und)
        if giant < 1.0:
            logger.info("book %r: giant component fraction %.4f", rec.book_id, giant)
        rows.append(metrics.book_metrics(und))
    return rows


def netstats_matrix(data: ScenarioData, rows=None) -> learn.FeatureMatrix:
    rows = rows or netstats_rows(data)
    fvs = []
    for rec, row in zip(data.records, rows):
        fvs.append(learn.network_features(row, book_id=rec.book_id, author=rec.author))
    return learn.FeatureMatrix(tuple(fvs)).validate()


def topword_matrix(data: ScenarioData, n_words: int = 20) -> learn.FeatureMatrix:
    return learn.top_word_features(data.streams, data.authors, n_words=n_words).validate()


def matrix_from_data(data: ScenarioData, features: str) -> learn.FeatureMatrix:
    if features not in FEATURE_SETS:
        raise ValueError(f"unknown feature set {features!r}, expected one of {FEATURE_SETS}")
    if features == "motifs":
        return motif_matrix(data)
    if features == "netstats":
        return netstats_matrix(data)
    return topword_matrix(data)


def feature_matrix(manifest, features: str, scenario: str, stops=None,
                   lemmatizer=None) -> learn.FeatureMatrix:
    """One-call feature assembly for a (feature set, scenario) pair."""
    if features not in FEATURE_SETS:
        raise ValueError(f"unknown feature set {features!r}, expected one of {FEATURE_SETS}")
    data = scenario_networks(manifest, scenario, stops, lemmatizer)
    return matrix_from_data(data, features)
