"""Posting and skill-source data model plus file ingestion.

Live crawling is out of scope; corpora arrive as JSONL or CSV exports. A
``Fetcher`` seam marks where a crawler would attach, but only the
file-backed implementation ships.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path
from typing import Iterator, Protocol, Sequence

from .errors import DuplicateId, FileUnreadable, FormatError

JSONL_FIELDS = ("id", "title", "company", "description", "location", "date_posted")
_REQUIRED_FIELDS = ("id", "title", "company", "description")


@dataclass(frozen=True)
class JobPosting:
    """One raw posting record as crawled/exported."""

    id: str
    title_raw: str
    company_name_raw: str
    description_raw: str
    location: str | None = None
    date_posted: str | None = None  # ISO-8601 "YYYY-MM-DD"


@dataclass(frozen=True)
class RawSkillEntry:
    """One row of the skill lexicon: a surface and its co-occurrence count."""

    surface: str
    cooccurrence_count: int
    word_count: int


@dataclass(frozen=True)
class FileManifest:
    """Per-file ingestion accounting: valid + skipped = total records."""

    path: str
    total: int
    valid: int
    skipped: int


@dataclass(frozen=True)
class Corpus:
    postings: tuple[JobPosting, ...]
    source_manifest: tuple[FileManifest, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.postings)


class Fetcher(Protocol):
    """Seam for a future crawler: a URL yields raw record dicts."""

    def fetch(self, url: str) -> Iterator[dict]: ...


class FileFetcher:
    """The only shipped Fetcher: treats the URL as a local JSONL path."""

    def fetch(self, url: str) -> Iterator[dict]:
        path = url.removeprefix("file://")
        for rec in _iter_jsonl_records(path):
            if isinstance(rec, dict):
                yield rec


def ingest_postings(
    paths: str | Path | Sequence[str | Path], format: str = "jsonl"
) -> Corpus:
    """Build a Corpus from one or more files of the declared format.

    Invalid records (missing id/title/company/description, unparseable line,
    bad date) are skipped and counted in the manifest rather than aborting
    the batch. A posting id seen twice, within or across files, is an error.
    """
    if isinstance(paths, (str, Path)):
        paths = [paths]
    if format not in ("jsonl", "csv"):
        raise ValueError(f"unknown corpus format: {format!r}")

    postings: list[JobPosting] = []
    seen_ids: set[str] = set()
    manifests: list[FileManifest] = []
    for path in paths:
        total = valid = skipped = 0
        records = (
            _iter_jsonl_records(path) if format == "jsonl" else _iter_csv_records(path)
        )
        for rec in records:
            total += 1
            posting = _to_posting(rec)
            if posting is None:
                skipped += 1
                continue
            if posting.id in seen_ids:
                raise DuplicateId(f"duplicate posting id {posting.id!r} in {path}")
            seen_ids.add(posting.id)
            postings.append(posting)
            valid += 1
        manifests.append(
            FileManifest(path=str(path), total=total, valid=valid, skipped=skipped)
        )
    return Corpus(postings=tuple(postings), source_manifest=tuple(manifests))


def _to_posting(rec: object) -> JobPosting | None:
    if not isinstance(rec, dict):
        return None
    vals = {}
    for key in _REQUIRED_FIELDS:
        v = rec.get(key)
        if not isinstance(v, str) or not v.strip():
            return None
        vals[key] = v
    location = rec.get("location")
    if location is not None and not isinstance(location, str):
        return None
    date_posted = rec.get("date_posted")
    if date_posted is not None:
        if not isinstance(date_posted, str):
            return None
        try:
            date.fromisoformat(date_posted)
        except ValueError:
            return None
    return JobPosting(
        id=vals["id"],
        title_raw=vals["title"],
        company_name_raw=vals["company"],
        description_raw=vals["description"],
        location=location or None,
        date_posted=date_posted,
    )


def _iter_jsonl_records(path: str | Path) -> Iterator[object]:
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise FileUnreadable(f"cannot read postings file {path}: {exc}") from exc
    with fh:
        for line in fh:
            if not line.strip():
                continue
            try:
                yield json.loads(line)
            except json.JSONDecodeError:
                yield None  # counted as a skipped record, not a fatal error


def _iter_csv_records(path: str | Path) -> Iterator[object]:
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise FileUnreadable(f"cannot read postings file {path}: {exc}") from exc
    with fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [f for f in _REQUIRED_FIELDS if f not in header]
        if missing:
            raise FormatError(f"{path}: CSV header missing columns {missing}")
        for row in reader:
            yield {k: v for k, v in row.items() if v not in (None, "")}


def ingest_skill_lexicon(path: str | Path) -> list[RawSkillEntry]:
    """Read a ``surface,count`` CSV into raw skill entries.

    The word count is derived from the surface's whitespace tokens. Blank
    lines and ``#`` comments are skipped; a malformed or negative count is a
    format error.
    """
    entries = []
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise FileUnreadable(f"cannot read skill lexicon {path}: {exc}") from exc
    for lineno, row in enumerate(rows, start=1):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if row[0].lstrip().startswith("#"):
            continue
        if len(row) < 2:
            raise FormatError(f"{path}:{lineno}: expected 'surface,count'")
        surface = row[0].strip()
        try:
            count = int(row[1].strip())
        except ValueError:
            raise FormatError(
                f"{path}:{lineno}: count is not an integer: {row[1]!r}"
            ) from None
        if count < 0:
            raise FormatError(f"{path}:{lineno}: negative count {count}")
        if not surface:
            raise FormatError(f"{path}:{lineno}: empty surface")
        entries.append(
            RawSkillEntry(
                surface=surface,
                cooccurrence_count=count,
                word_count=len(surface.split()),
            )
        )
    return entries
