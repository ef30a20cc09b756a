"""Parse citation-event files into validated record streams.

Two line-oriented formats are supported: headered CSV
(``citing_id,journal,class``) and JSONL (one object per line with those keys,
``citing_id`` optional). Files must be UTF-8; a BOM on the first line is
stripped. Because parsing is line-by-line, fields may not contain newlines.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from .errors import CitemetricError, MalformedLineError, UnknownClassError
from .model import CitationClass, CitationRecord, normalize_journal_key

CSV_HEADER = ("citing_id", "journal", "class")

#: Cap on per-stream error detail kept in an IngestReport.
MAX_REPORTED_ERRORS = 20

_CLASS_BY_LABEL = {c.value: c for c in CitationClass}


class Format(Enum):
    CSV = "csv"
    JSONL = "jsonl"


class Policy(Enum):
    """Error policy: STRICT aborts on the first bad line, SKIP drops it."""

    STRICT = "strict"
    SKIP = "skip"


@dataclass
class IngestReport:
    """Counts of accepted/rejected lines plus the first few failure reasons.

    Filled in while the record stream is consumed; totals are final once the
    stream is exhausted.
    """

    accepted: int = 0
    rejected: int = 0
    first_errors: list[tuple[int, str]] = field(default_factory=list)


def parse_record(line: str, fmt: Format) -> CitationRecord:
    """Parse one data line into a record with a normalized journal key.

    Class labels are matched case-insensitively against exactly
    supporting/disputing/mentioning.

    Raises:
        MalformedLineError: wrong field count or invalid JSON object.
        UnknownClassError: class label outside the taxonomy.
        EmptyKeyError: journal field normalizes to the empty string.
    """
    if fmt is Format.JSONL:
        try:
            obj = json.loads(line)
        except ValueError as exc:
            raise MalformedLineError(f"invalid JSON: {exc}") from None
        if not isinstance(obj, dict):
            raise MalformedLineError("JSONL line is not an object")
        try:
            journal = obj["journal"]
            label = obj["class"]
        except KeyError as exc:
            raise MalformedLineError(f"missing key {exc}") from None
        citing_id = obj.get("citing_id", "")
        if not (isinstance(journal, str) and isinstance(label, str) and isinstance(citing_id, str)):
            raise MalformedLineError("citing_id, journal and class must be strings")
    elif fmt is Format.CSV:
        row = next(csv.reader([line]), [])
        if len(row) != len(CSV_HEADER):
            raise MalformedLineError(f"expected {len(CSV_HEADER)} CSV fields, got {len(row)}")
        citing_id, journal, label = row
    else:
        raise ValueError(f"unsupported format: {fmt!r}")

    klass = _CLASS_BY_LABEL.get(label.casefold())
    if klass is None:
        raise UnknownClassError(f"unknown citation class {label!r}")
    return CitationRecord(citing_id, normalize_journal_key(journal), klass)


def format_record(record: CitationRecord, fmt: Format) -> str:
    """Serialize a record to a single CSV or JSONL line (no trailing newline).

    Inverse of :func:`parse_record`: re-parsing the line yields an equal
    record. In CSV an empty ``citing_id`` is an empty field; in JSONL it is
    omitted. CSV cannot carry newlines in ``citing_id``.
    """
    if fmt is Format.JSONL:
        obj: dict[str, str] = {}
        if record.citing_id:
            obj["citing_id"] = record.citing_id
        obj["journal"] = record.journal
        obj["class"] = record.klass.value
        return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))
    if "\n" in record.citing_id or "\r" in record.citing_id:
        raise ValueError("citing_id with newlines cannot be serialized to CSV; use JSONL")
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(
        (record.citing_id, record.journal, record.klass.value)
    )
    return buf.getvalue()[:-1]


def ingest_stream(
    source: Iterable[str],
    fmt: Format,
    policy: Policy = Policy.STRICT,
) -> tuple[Iterator[CitationRecord], IngestReport]:
    """Turn a line stream into a lazy record stream plus an ingest report.

    Record order matches line order. Under STRICT the first parse error is
    re-raised annotated with its 1-based line number; under SKIP bad lines are
    counted and the stream continues. In CSV format line 1 must be the exact
    header ``citing_id,journal,class``; a bad or missing header raises under
    either policy since the whole file is then suspect. The returned report is
    shared with the generator and is complete only after the stream has been
    fully consumed.
    """
    report = IngestReport()

    def records() -> Iterator[CitationRecord]:
        need_header = fmt is Format.CSV
        lineno = 0
        for raw in source:
            lineno += 1
            line = raw.rstrip("\r\n")
            if lineno == 1 and line.startswith("\ufeff"):
                line = line[1:]
            if need_header:
                row = tuple(next(csv.reader([line]), ()))
                if row != CSV_HEADER:
                    raise MalformedLineError(
                        f"line 1: expected CSV header {','.join(CSV_HEADER)!r}, got {line!r}"
                    )
                need_header = False
                continue
            try:
                rec = parse_record(line, fmt)
            except CitemetricError as exc:
                report.rejected += 1
                if len(report.first_errors) < MAX_REPORTED_ERRORS:
                    report.first_errors.append((lineno, f"{type(exc).__name__}: {exc}"))
                if policy is Policy.STRICT:
                    raise type(exc)(f"line {lineno}: {exc}") from None
                continue
            report.accepted += 1
            yield rec
        if need_header:
            raise MalformedLineError("line 1: missing CSV header")

    return records(), report
