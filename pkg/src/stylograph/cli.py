"""Command-line front end.

Subcommands: census, metrics, classify, baseline, pca. Every output file
embeds a provenance comment (seed, scenario, truncation length, classifier
defaults) and each run appends its provenance record to provenance.jsonl in
the output directory (skipped when the identical record is already there,
so reruns stay byte-identical). Exit codes: 0 ok, 1 configuration error,
2 data error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__, learn, metrics, motifs, network, pipeline, svgplot
from .corpus import load_manifest
from .errors import ConfigError, DataError
from .learn import CLASSIFIER_KINDS, ClassifierSpec
from .pipeline import FEATURE_SETS
from .preprocess import SCENARIOS

logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    command: str
    manifest: Path
    scenarios: tuple[str, ...]
    features: str = "motifs"
    classifiers: tuple[str, ...] = CLASSIFIER_KINDS
    folds: int = 10
    seed: int = 42
    out: Path = Path("out")
    trials: int = 10

    def validate(self) -> "RunConfig":
        for s in self.scenarios:
            if s not in SCENARIOS:
                raise ConfigError(f"unknown scenario {s!r}, expected one of {', '.join(SCENARIOS)}")
        if self.features not in FEATURE_SETS:
            raise ConfigError(f"unknown feature set {self.features!r}, expected one of {', '.join(FEATURE_SETS)}")
        for c in self.classifiers:
            if c not in CLASSIFIER_KINDS:
                raise ConfigError(f"unknown classifier {c!r}, expected one of {', '.join(CLASSIFIER_KINDS)}")
        if self.folds < 2:
            raise ConfigError(f"folds must be >= 2, got {self.folds}")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if not self.scenarios:
            raise ConfigError("at least one scenario is required")
        return self


def _provenance(config: RunConfig, **extra) -> str:
    record = {
        "version": __version__,
        "command": config.command,
        "manifest": str(config.manifest),
        "scenarios": list(config.scenarios),
        "features": config.features,
        "classifiers": [ClassifierSpec(kind=c).to_dict() for c in config.classifiers],
        "folds": config.folds,
        "seed": config.seed,
        "trials": config.trials,
        **extra,
    }
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _log_provenance(config: RunConfig, line: str) -> None:
    path = config.out / "provenance.jsonl"
    if path.exists() and line in path.read_text(encoding="utf-8").splitlines():
        return
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(line + "\n")


def _fmt(v) -> str:
    return repr(float(v)) if isinstance(v, float) else str(v)


def cmd_census(config: RunConfig) -> None:
    manifest = load_manifest(config.manifest)
    scenario = config.scenarios[0]
    data = pipeline.scenario_networks(manifest, scenario)
    censuses = pipeline.motif_censuses(data)
    prov = _provenance(config, truncation_length=data.target_length, scenario=scenario)

    motifs.write_census_csv(censuses, config.out / f"census_{scenario}.csv", provenance=prov)
    motifs.write_motif_table(config.out / "motif_types.csv")
    stats_path = config.out / f"network_stats_{scenario}.csv"
    with open(stats_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# provenance: {prov}\n")
        writer = csv.writer(fh)
        writer.writerow(["book", "scenario", "tokens", "nodes", "edges", "giant_fraction"])
        for rec, stream, net in zip(data.records, data.streams, data.networks):
            giant = metrics.giant_component_fraction(net.skeleton())
            writer.writerow([rec.book_id, scenario, len(stream.tokens),
                             net.n_nodes, net.n_edges, _fmt(giant)])
    _log_provenance(config, prov)
    print(f"census: {len(censuses)} books, scenario {scenario}, "
          f"truncation {data.target_length} tokens -> {config.out}")


def cmd_metrics(config: RunConfig) -> None:
    manifest = load_manifest(config.manifest)
    scenario = config.scenarios[0]
    data = pipeline.scenario_networks(manifest, scenario)
    rows = pipeline.netstats_rows(data)
    prov = _provenance(config, truncation_length=data.target_length, scenario=scenario)
    path = config.out / f"metrics_{scenario}.csv"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# provenance: {prov}\n")
        writer = csv.writer(fh)
        writer.writerow(["book", "scenario", *metrics.METRIC_COLUMNS])
        for rec, row in zip(data.records, rows):
            cells = ["" if row[c] is None else _fmt(row[c]) for c in metrics.METRIC_COLUMNS]
            writer.writerow([rec.book_id, scenario, *cells])
    _log_provenance(config, prov)
    print(f"metrics: {len(rows)} books, scenario {scenario} -> {path}")


def cmd_classify(config: RunConfig) -> None:
    manifest = load_manifest(config.manifest)
    scenarios = config.scenarios
    if config.features == "topwords" and scenarios != ("original",):
        logger.info("topwords features are defined on the original scenario; overriding")
        scenarios = ("original",)
    truncations = {}
    table = {}
    for scenario in scenarios:
        data = pipeline.scenario_networks(manifest, scenario)
        matrix = pipeline.matrix_from_data(data, config.features)
        truncations[scenario] = data.target_length
        table[scenario] = {}
        for kind in config.classifiers:
            result = learn.cross_validate(matrix, ClassifierSpec(kind=kind),
                                          folds=config.folds, seed=config.seed)
            table[scenario][kind] = result.accuracy
    prov = _provenance(config, scenarios_run=list(scenarios), truncation_lengths=truncations)
    path = config.out / f"results_{config.features}.csv"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# provenance: {prov}\n")
        writer = csv.writer(fh)
        writer.writerow(["scenario", *config.classifiers])
        for scenario in scenarios:
            writer.writerow(
                [scenario, *(f"{100.0 * table[scenario][c]:.1f}" for c in config.classifiers)]
            )
    _log_provenance(config, prov)
    for scenario in scenarios:
        cells = ", ".join(f"{c}={100.0 * table[scenario][c]:.1f}%" for c in config.classifiers)
        print(f"classify[{config.features}] {scenario}: {cells}")


def cmd_baseline(config: RunConfig) -> None:
    manifest = load_manifest(config.manifest)
    scenario = config.scenarios[0]
    matrix = pipeline.feature_matrix(manifest, config.features, scenario)
    chance = 1.0 / len(matrix.labels)
    prov = _provenance(config, scenario=scenario, chance=chance)
    path = config.out / f"baseline_{config.features}_{scenario}.csv"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# provenance: {prov}\n")
        writer = csv.writer(fh)
        writer.writerow(["classifier", "shuffled_mean_accuracy", "chance_level"])
        for kind in config.classifiers:
            mean_acc = learn.shuffled_label_baseline(
                matrix, ClassifierSpec(kind=kind), trials=config.trials,
                folds=config.folds, seed=config.seed,
            )
            writer.writerow([kind, f"{100.0 * mean_acc:.1f}", f"{100.0 * chance:.1f}"])
            print(f"baseline[{config.features}] {scenario} {kind}: "
                  f"{100.0 * mean_acc:.1f}% (chance {100.0 * chance:.1f}%)")
    _log_provenance(config, prov)


def cmd_pca(config: RunConfig) -> None:
    manifest = load_manifest(config.manifest)
    scenario = config.scenarios[0]
    matrix = pipeline.feature_matrix(manifest, config.features, scenario)
    result = learn.pca_project(matrix, components=2)
    prov = _provenance(config, scenario=scenario)
    base = config.out / f"pca_{config.features}_{scenario}"
    with open(base.with_suffix(".csv"), "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# provenance: {prov}\n")
        writer = csv.writer(fh)
        writer.writerow(["book", "author", "pc1", "pc2"])
        for row, (x, y) in zip(matrix.rows, result.coords):
            writer.writerow([row.book_id, row.author, _fmt(float(x)), _fmt(float(y))])
    points = [(float(x), float(y), row.author)
              for row, (x, y) in zip(matrix.rows, result.coords)]
    svg = svgplot.scatter_svg(
        points,
        title=f"{config.features} features, scenario {scenario}",
        provenance=prov,
    )
    base.with_suffix(".svg").write_text(svg, encoding="utf-8")
    _log_provenance(config, prov)
    print(f"pca: {len(points)} books -> {base.with_suffix('.csv').name}, "
          f"{base.with_suffix('.svg').name}")


_COMMANDS = {
    "census": cmd_census,
    "metrics": cmd_metrics,
    "classify": cmd_classify,
    "baseline": cmd_baseline,
    "pca": cmd_pca,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stylograph",
                     description="Word co-occurrence network stylometry experiments")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("census", "motif census CSV per book"),
        ("metrics", "network measurement CSV per book"),
        ("classify", "scenario x classifier accuracy table"),
        ("baseline", "shuffled-label chance verification"),
        ("pca", "2-component projection CSV and SVG scatter"),
    ):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--manifest", required=True, type=Path,
                       help="corpus manifest CSV (author,title,year,path)")
        p.add_argument("--scenario", action="append", default=None, metavar="TAG",
                       help="preprocessing scenario; repeat or comma-separate "
                            f"({', '.join(SCENARIOS)}; 'all' for every one)")
        p.add_argument("--features", default="motifs", choices=FEATURE_SETS)
        p.add_argument("--classifiers", default=",".join(CLASSIFIER_KINDS),
                       help="comma-separated subset of " + ", ".join(CLASSIFIER_KINDS))
        p.add_argument("--folds", type=int, default=10)
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--out", type=Path, default=Path("out"))
        p.add_argument("--trials", type=int, default=10,
                       help="shuffled-label trials (baseline only)")
    return parser


def _scenario_list(args) -> tuple[str, ...]:
    raw = args.scenario
    if not raw:
        return tuple(SCENARIOS) if args.command == "classify" else ("original",)
    flat = []
    for chunk in raw:
        flat.extend(s.strip() for s in chunk.split(",") if s.strip())
    if "all" in flat:
        return tuple(SCENARIOS)
    return tuple(dict.fromkeys(flat))


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
        config = RunConfig(
            command=args.command,
            manifest=args.manifest,
            scenarios=_scenario_list(args),
            features=args.features,
            classifiers=tuple(c.strip() for c in args.classifiers.split(",") if c.strip()),
            folds=args.folds,
            seed=args.seed,
            out=args.out,
            trials=args.trials,
        ).validate()
        config.out.mkdir(parents=True, exist_ok=True)
        _COMMANDS[config.command](config)
        return 0
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
