"""Scite index and eligibility filtering over tally tables."""

from __future__ import annotations

import csv
from typing import IO, Iterable

from .errors import UndefinedIndexError
from .model import JournalKey, JournalMetrics, JournalTally, MetricsConfig

METRICS_HEADER = (
    "journal",
    "supporting",
    "disputing",
    "mentioning",
    "total",
    "classified",
    "eligible",
    "scite_index",
)

_DEFAULT_CONFIG = MetricsConfig()


def scite_index(tally: JournalTally) -> float:
    """supporting / (supporting + disputing), in [0, 1].

    The mentioning count has no effect. Raises UndefinedIndexError when there
    are no classified citations (zero denominator).
    """
    classified = tally.supporting + tally.disputing
    if classified == 0:
        raise UndefinedIndexError("scite index undefined with no classified citations")
    return tally.supporting / classified


def evaluate_journal(
    journal: JournalKey,
    tally: JournalTally,
    config: MetricsConfig = _DEFAULT_CONFIG,
) -> JournalMetrics:
    """Apply the eligibility rule and compute the index when it applies.

    Eligible means total() strictly exceeds ``min_total_citations`` and
    classified() is at least ``min_classified``.
    """
    eligible = (
        tally.total() > config.min_total_citations
        and tally.classified() >= config.min_classified
    )
    return JournalMetrics(journal, tally, scite_index(tally) if eligible else None, eligible)


def build_metrics_table(
    tallies: dict[JournalKey, JournalTally],
    config: MetricsConfig = _DEFAULT_CONFIG,
) -> list[JournalMetrics]:
    """Evaluate every journal, sorted by journal key."""
    return [evaluate_journal(key, tallies[key], config) for key in sorted(tallies)]


def write_metrics_csv(metrics: Iterable[JournalMetrics], out: IO[str]) -> None:
    """Serialize the metrics table; scite_index is 4-decimal, empty when absent."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(METRICS_HEADER)
    for m in metrics:
        t = m.tally
        writer.writerow(
            (
                m.journal,
                t.supporting,
                t.disputing,
                t.mentioning,
                t.total(),
                t.classified(),
                "true" if m.eligible else "false",
                "" if m.scite_index is None else f"{m.scite_index:.4f}",
            )
        )
