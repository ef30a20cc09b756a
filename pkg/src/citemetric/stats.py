"""Deterministic statistics kernel and report-data exports.

All reductions go through ``math.fsum`` (exactly rounded summation), so
results are bit-identical across runs and safe on counts spanning many orders
of magnitude.
"""

from __future__ import annotations

import csv
import json
import math
from bisect import bisect_right
from dataclasses import asdict
from typing import IO, Sequence

from .errors import (
    EmptyInputError,
    InsufficientDataError,
    LengthMismatchError,
    OutOfRangeError,
    ZeroVarianceError,
)
from .model import CorrelationReport, JournalKey, JournalMetrics, StatsSummary

HISTOGRAM_HEADER = ("bin_lower", "bin_upper", "count")
SCATTER_HEADER = ("journal", "log10_total", "scite_index")

#: Default binning for the scite-index distribution: 0.02-wide bins over [0, 1].
SI_HISTOGRAM_BINS = 50


def mean(xs: Sequence[float]) -> float:
    """Arithmetic mean."""
    if not xs:
        raise EmptyInputError("mean of empty sequence")
    return math.fsum(xs) / len(xs)


def median(xs: Sequence[float]) -> float:
    """Middle order statistic; mean of the two middle values for even length."""
    n = len(xs)
    if n == 0:
        raise EmptyInputError("median of empty sequence")
    ordered = sorted(xs)
    mid = n // 2
    if n % 2:
        return float(ordered[mid])
    return (ordered[mid - 1] + ordered[mid]) / 2.0


def sample_sd(xs: Sequence[float]) -> float:
    """Square root of the unbiased (n-1 denominator) sample variance."""
    n = len(xs)
    if n < 2:
        raise InsufficientDataError(f"sample sd needs at least 2 values, got {n}")
    m = math.fsum(xs) / n
    return math.sqrt(math.fsum((x - m) ** 2 for x in xs) / (n - 1))


def skewness(xs: Sequence[float]) -> float:
    """Adjusted Fisher-Pearson standardized moment coefficient (G1).

    G1 = sqrt(n(n-1))/(n-2) * m3 / m2^(3/2) with m2, m3 the 1/n central
    moments. Computed under a single square root so that exactly-representable
    moment ratios stay exact.
    """
    n = len(xs)
    if n < 3:
        raise InsufficientDataError(f"skewness needs at least 3 values, got {n}")
    m = math.fsum(xs) / n
    m2 = math.fsum((x - m) ** 2 for x in xs) / n
    if m2 == 0.0:
        raise ZeroVarianceError("skewness undefined on a constant sequence")
    m3 = math.fsum((x - m) ** 3 for x in xs) / n
    magnitude = math.sqrt(n * (n - 1) * m3 * m3 / (m2 * m2 * m2)) / (n - 2)
    return math.copysign(magnitude, m3)


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Pearson correlation coefficient, clamped to [-1, 1]."""
    n = len(xs)
    if n != len(ys):
        raise LengthMismatchError(f"length mismatch: {n} vs {len(ys)}")
    if n < 2:
        raise InsufficientDataError(f"correlation needs at least 2 pairs, got {n}")
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    sxx = math.fsum((x - mx) ** 2 for x in xs)
    syy = math.fsum((y - my) ** 2 for y in ys)
    if sxx == 0.0 or syy == 0.0:
        raise ZeroVarianceError("correlation undefined on a constant sequence")
    sxy = math.fsum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return min(1.0, max(-1.0, sxy / math.sqrt(sxx * syy)))


def summarize(values: Sequence[float], label: str = "values") -> StatsSummary:
    """Descriptive summary of one column (count/mean/median/sd/skew/min/max).

    ``skew`` is omitted when undefined (n < 3 or constant input). ``label``
    only improves error messages.
    """
    n = len(values)
    if n < 2:
        raise InsufficientDataError(f"{label}: summary needs at least 2 values, got {n}")
    try:
        skew = skewness(values)
    except (InsufficientDataError, ZeroVarianceError):
        skew = None
    lo = float(min(values))
    hi = float(max(values))
    # fsum is exact but the final division can land one ulp outside the data
    # range; clamp so min <= mean <= max holds.
    avg = min(hi, max(lo, mean(values)))
    return StatsSummary(n, avg, median(values), sample_sd(values), skew, lo, hi)


def correlation_report(metrics: Sequence[JournalMetrics]) -> CorrelationReport:
    """Correlate supporting/disputing (all journals) and scite index
    (eligible journals only) against total citations."""
    totals = [m.tally.total() for m in metrics]
    eligible = [m for m in metrics if m.eligible]
    si = [m.scite_index for m in eligible]
    eligible_totals = [m.tally.total() for m in eligible]
    return CorrelationReport(
        _corr([m.tally.supporting for m in metrics], totals, "supporting vs total"),
        _corr([m.tally.disputing for m in metrics], totals, "disputing vs total"),
        _corr(si, eligible_totals, "scite index vs total"),
    )


def _corr(xs: Sequence[float], ys: Sequence[float], name: str) -> float:
    try:
        return pearson(xs, ys)
    except (InsufficientDataError, ZeroVarianceError) as exc:
        raise type(exc)(f"{name}: {exc}") from None


def histogram(
    values: Sequence[float],
    lo: float,
    hi: float,
    bins: int,
) -> list[tuple[float, float, int]]:
    """Equal-width binning of ``values`` over [lo, hi].

    Bins are half-open [lower, upper) except the last, which is closed so
    ``hi`` itself is counted. Bin counts always sum to ``len(values)``.

    Raises:
        OutOfRangeError: if any value (or NaN) falls outside [lo, hi].
    """
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    edges = [lo + (hi - lo) * i / bins for i in range(bins + 1)]
    edges[-1] = hi
    counts = [0] * bins
    for v in values:
        if not lo <= v <= hi:
            raise OutOfRangeError(f"value {v!r} outside [{lo}, {hi}]")
        idx = bisect_right(edges, v) - 1
        if idx == bins:  # v == hi, closed upper edge
            idx = bins - 1
        counts[idx] += 1
    return [(edges[i], edges[i + 1], counts[i]) for i in range(bins)]


def scatter_points(
    metrics: Sequence[JournalMetrics],
) -> list[tuple[JournalKey, float, float]]:
    """(journal, log10 total citations, scite index) for eligible journals.

    Eligibility guarantees total >= 1, so the log is always defined.
    """
    return [
        (m.journal, math.log10(m.tally.total()), m.scite_index)
        for m in metrics
        if m.eligible
    ]


def write_summary_json(summaries: dict[str, StatsSummary], out: IO[str]) -> None:
    """One StatsSummary object per column, keyed by column name."""
    json.dump({key: asdict(s) for key, s in summaries.items()}, out, indent=2)
    out.write("\n")


def write_correlations_json(report: CorrelationReport, out: IO[str]) -> None:
    json.dump(asdict(report), out, indent=2)
    out.write("\n")


def write_histogram_csv(rows: Sequence[tuple[float, float, int]], out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(HISTOGRAM_HEADER)
    writer.writerows(rows)


def write_scatter_csv(points: Sequence[tuple[JournalKey, float, float]], out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SCATTER_HEADER)
    writer.writerows(points)
