"""Book corpus handling: manifest loading, boilerplate stripping, truncation.

A corpus is described by a UTF-8 CSV manifest with header
``author,title,year,path``. Paths are resolved relative to the manifest's
directory. Book files are UTF-8 plain text; invalid byte sequences are
replaced rather than rejected.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .errors import DataError

MANIFEST_HEADER = ("author", "title", "year", "path")


@dataclass(frozen=True)
class BookRecord:
    author: str
    title: str
    year: int
    path: str  # as written in the manifest
    abspath: Path  # resolved against the manifest directory

    @property
    def book_id(self) -> str:
        return self.title


@dataclass(frozen=True)
class CorpusManifest:
    records: tuple[BookRecord, ...]

    @property
    def authors(self) -> tuple[str, ...]:
        seen = []
        for rec in self.records:
            if rec.author not in seen:
                seen.append(rec.author)
        return tuple(seen)

    def __len__(self) -> int:
        return len(self.records)


@dataclass(frozen=True)
class TruncationPolicy:
    """Equal-length rule: every stream is cut to the corpus-wide minimum."""

    target_length: int

    def __post_init__(self):
        if self.target_length <= 0:
            raise DataError(f"truncation target must be positive, got {self.target_length}")


def load_manifest(path) -> CorpusManifest:
    """Read a manifest CSV and validate the corpus constraints.

    Raises DataError on: missing file, malformed row (reported with its line
    number), duplicate path, fewer than 2 authors, or an author with fewer
    than 2 books.
    """
    path = Path(path)
    if not path.is_file():
        raise DataError(f"manifest not found: {path}")
    base = path.parent
    records = []
    seen_paths = set()
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"manifest {path} is empty") from None
        if tuple(h.strip().lower() for h in header) != MANIFEST_HEADER:
            raise DataError(f"manifest {path} line 1: expected header {','.join(MANIFEST_HEADER)}")
        for row in reader:
            line = reader.line_num
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 4:
                raise DataError(f"manifest {path} line {line}: expected 4 fields, got {len(row)}")
            author, title, year_s, rel = (field.strip() for field in row)
            if not author:
                raise DataError(f"manifest {path} line {line}: empty author")
            if not rel:
                raise DataError(f"manifest {path} line {line}: empty path")
            try:
                year = int(year_s)
            except ValueError:
                raise DataError(f"manifest {path} line {line}: year {year_s!r} is not an integer") from None
            abspath = (base / rel).resolve() if not Path(rel).is_absolute() else Path(rel)
            if abspath in seen_paths:
                raise DataError(f"manifest {path} line {line}: duplicate path {rel}")
            seen_paths.add(abspath)
            if not abspath.is_file():
                raise DataError(f"manifest {path} line {line}: book file not found: {abspath}")
            records.append(BookRecord(author, title, year, rel, abspath))

    manifest = CorpusManifest(tuple(records))
    if len(manifest.authors) < 2:
        raise DataError(f"manifest {path}: fewer than 2 authors")
    counts = {a: 0 for a in manifest.authors}
    for rec in records:
        counts[rec.author] += 1
    thin = sorted(a for a, c in counts.items() if c < 2)
    if thin:
        raise DataError(f"manifest {path}: authors with fewer than 2 books: {', '.join(thin)}")
    return manifest


def save_manifest(manifest: CorpusManifest, path) -> None:
    """Write a manifest back to CSV; inverse of load_manifest for valid input."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(MANIFEST_HEADER)
        for rec in manifest.records:
            writer.writerow([rec.author, rec.title, rec.year, rec.path])


def read_book(record: BookRecord) -> str:
    try:
        return record.abspath.read_text(encoding="utf-8", errors="replace")
    except OSError as exc:
        raise DataError(f"cannot read book {record.title!r}: {exc}") from exc


def _is_marker(line: str, kind: str) -> bool:
    upper = line.upper()
    return kind in upper and "PROJECT GUTENBERG" in upper


def strip_boilerplate(raw: str) -> str:
    """Drop repository header/footer around the actual book text.

    Content strictly after a line containing "START OF" plus the project
    identifier, and strictly before a later line containing "END OF" plus the
    identifier. Pass-through when markers are absent, so plain texts are
    untouched. Idempotent.
    """
    lines = raw.splitlines()
    start = 0
    for i, line in enumerate(lines):
        if _is_marker(line, "START OF"):
            start = i + 1
            break
    end = len(lines)
    for i in range(start, len(lines)):
        if _is_marker(lines[i], "END OF"):
            end = i
            break
    if start == 0 and end == len(lines):
        return raw
    return "\n".join(lines[start:end])


def truncation_policy(streams) -> TruncationPolicy:
    """Compute the equal-length target: minimum token count over all streams."""
    if not streams:
        raise DataError("cannot compute truncation target for an empty corpus")
    shortest = min(streams, key=lambda s: len(s.tokens))
    if not shortest.tokens:
        raise DataError(f"book {shortest.book_id!r} has no tokens under scenario {shortest.scenario!r}")
    return TruncationPolicy(len(shortest.tokens))


def truncate(stream, policy: TruncationPolicy):
    """Return the first target_length tokens of a stream.

    A stream shorter than the target means the policy was computed against a
    different corpus; that is an error, not a silent pass.
    """
    if len(stream.tokens) < policy.target_length:
        raise DataError(
            f"book {stream.book_id!r}: stream length {len(stream.tokens)} "
            f"is below the truncation target {policy.target_length}"
        )
    return stream.replace_tokens(stream.tokens[: policy.target_length])


def truncate_corpus(streams):
    """Truncate every stream to the corpus minimum; returns (streams, policy)."""
    policy = truncation_policy(streams)
    return [truncate(s, policy) for s in streams], policy
