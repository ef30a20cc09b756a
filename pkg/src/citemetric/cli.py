"""Command-line frontend: ``synth`` | ``aggregate`` | ``report``.

The three stages communicate through files, with the per-journal tally CSV
as the checkpoint between aggregation and reporting:

    citemetric synth --preset paper -o corpus.jsonl
    citemetric aggregate -f jsonl corpus.jsonl -o tallies.csv
    citemetric report tallies.csv -o out/

Exit codes are a stable scripting contract: 0 success, 1 usage error,
2 data error, 3 I/O error. All outputs are deterministic for fixed inputs,
independent of the parallelism degree (``CITEMETRIC_THREADS`` caps the
number of input files ingested concurrently).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import NoReturn, Sequence

from .aggregate import (
    TallyTable,
    aggregate_corpus,
    merge_tables,
    read_tally_csv,
    write_tally_csv,
)
from .errors import CitemetricError, InvalidParamsError, MalformedLineError
from .ingest import CSV_HEADER, Format, IngestReport, Policy, format_record, ingest_stream
from .metrics import build_metrics_table, write_metrics_csv
from .model import MetricsConfig
from .stats import (
    SI_HISTOGRAM_BINS,
    correlation_report,
    histogram,
    scatter_points,
    summarize,
    write_correlations_json,
    write_histogram_csv,
    write_scatter_csv,
    write_summary_json,
)
from .synth import SynthParams, default_paper_regime, generate_corpus

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_IO = 3

PROG = "citemetric"

_SYNTH_FIELDS = (
    "journals",
    "lognormal_mu",
    "lognormal_sigma",
    "beta_alpha",
    "beta_beta",
    "mention_ratio",
    "seed",
)


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; our contract says 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Citation tally aggregation and scite-index reporting.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    agg = sub.add_parser(
        "aggregate",
        help="aggregate corpus files into a per-journal tally CSV",
        description="Ingest citation records and write per-journal tallies sorted by journal.",
    )
    agg.add_argument("inputs", nargs="+", metavar="FILE", help="corpus files to ingest")
    agg.add_argument(
        "-f", "--format", choices=("csv", "jsonl"), default="jsonl", help="corpus format (default: jsonl)"
    )
    agg.add_argument(
        "--policy",
        choices=("strict", "skip"),
        default="strict",
        help="strict: fail on the first malformed record; skip: drop and count them",
    )
    agg.add_argument("-o", "--output", required=True, metavar="TALLY_CSV", help="tally CSV to write")
    agg.set_defaults(func=_cmd_aggregate)

    rep = sub.add_parser(
        "report",
        help="compute metrics, summary statistics, correlations and figure data",
        description="Read a tally CSV and write metrics.csv, summary.json, "
        "correlations.json, si_histogram.csv and si_scatter.csv.",
    )
    rep.add_argument("tally", metavar="TALLY_CSV", help="tally CSV produced by aggregate")
    rep.add_argument(
        "--min-citations",
        type=_nonnegative_int,
        default=100,
        help="index requires total citations strictly above this (default: 100)",
    )
    rep.add_argument(
        "--min-classified",
        type=_positive_int,
        default=1,
        help="index requires at least this many classified citations (default: 1)",
    )
    rep.add_argument("-o", "--outdir", required=True, metavar="DIR", help="output directory")
    rep.set_defaults(func=_cmd_report)

    syn = sub.add_parser(
        "synth",
        help="generate a deterministic synthetic corpus",
        description="Write a seeded synthetic citation corpus. Flags override preset values.",
    )
    syn.add_argument("--preset", choices=("paper",), help="parameter preset to start from")
    syn.add_argument("--journals", type=_positive_int, help="number of journals")
    syn.add_argument("--lognormal-mu", type=float, help="log-scale location of classified totals")
    syn.add_argument("--lognormal-sigma", type=float, help="log-scale spread of classified totals")
    syn.add_argument("--beta-alpha", type=float, help="support propensity Beta alpha")
    syn.add_argument("--beta-beta", type=float, help="support propensity Beta beta")
    syn.add_argument("--mention-ratio", type=float, help="fraction of statements that are mentions")
    syn.add_argument("--seed", type=int, help="64-bit master seed")
    syn.add_argument(
        "-f", "--format", choices=("csv", "jsonl"), default="jsonl", help="corpus format (default: jsonl)"
    )
    syn.add_argument("-o", "--output", required=True, metavar="FILE", help="corpus file to write")
    syn.set_defaults(func=_cmd_synth)

    return parser


def _thread_cap() -> int:
    raw = os.environ.get("CITEMETRIC_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidParamsError(f"CITEMETRIC_THREADS must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InvalidParamsError(f"CITEMETRIC_THREADS must be >= 1, got {cap}")
    return cap


def _ingest_file(path: str, fmt: Format, policy: Policy) -> tuple[TallyTable, IngestReport]:
    try:
        with open(path, encoding="utf-8") as fh:
            records, report = ingest_stream(fh, fmt, policy)
            table = aggregate_corpus(records)
    except UnicodeDecodeError as exc:
        raise MalformedLineError(f"{path}: invalid UTF-8: {exc}") from exc
    except CitemetricError as exc:
        raise type(exc)(f"{path}: {exc}") from exc
    return table, report


def _print_report(path: str, report: IngestReport) -> None:
    print(f"{path}: {report.accepted} accepted, {report.rejected} rejected", file=sys.stderr)
    for lineno, reason in report.first_errors:
        print(f"  {path}:{lineno}: {reason}", file=sys.stderr)


def _cmd_aggregate(args: argparse.Namespace) -> int:
    fmt = Format(args.format)
    policy = Policy(args.policy)
    paths: list[str] = args.inputs
    workers = min(len(paths), _thread_cap())
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda p: _ingest_file(p, fmt, policy), paths))
    else:
        results = [_ingest_file(p, fmt, policy) for p in paths]
    combined: TallyTable = {}
    for path, (table, report) in zip(paths, results):
        _print_report(path, report)
        combined = merge_tables(combined, table)
    with open(args.output, "w", encoding="utf-8", newline="") as fh:
        write_tally_csv(combined, fh)
    return EXIT_OK


def _cmd_report(args: argparse.Namespace) -> int:
    with open(args.tally, encoding="utf-8") as fh:
        table = read_tally_csv(fh)
    config = MetricsConfig(args.min_citations, args.min_classified)
    metrics = build_metrics_table(table, config)
    eligible_si = [m.scite_index for m in metrics if m.eligible]
    summaries = {
        "supporting": summarize([m.tally.supporting for m in metrics], "supporting"),
        "disputing": summarize([m.tally.disputing for m in metrics], "disputing"),
        "scite_index": summarize(eligible_si, "scite_index"),
    }
    correlations = correlation_report(metrics)
    si_histogram = histogram(eligible_si, 0.0, 1.0, SI_HISTOGRAM_BINS)
    points = scatter_points(metrics)

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    with open(outdir / "metrics.csv", "w", encoding="utf-8", newline="") as fh:
        write_metrics_csv(metrics, fh)
    with open(outdir / "summary.json", "w", encoding="utf-8") as fh:
        write_summary_json(summaries, fh)
    with open(outdir / "correlations.json", "w", encoding="utf-8") as fh:
        write_correlations_json(correlations, fh)
    with open(outdir / "si_histogram.csv", "w", encoding="utf-8", newline="") as fh:
        write_histogram_csv(si_histogram, fh)
    with open(outdir / "si_scatter.csv", "w", encoding="utf-8", newline="") as fh:
        write_scatter_csv(points, fh)
    return EXIT_OK


def _cmd_synth(args: argparse.Namespace) -> int:
    base = default_paper_regime() if args.preset == "paper" else None
    kwargs = {}
    for field in _SYNTH_FIELDS:
        value = getattr(args, field)
        if value is not None:
            kwargs[field] = value
        elif base is not None:
            kwargs[field] = getattr(base, field)
    if "journals" not in kwargs:
        raise InvalidParamsError("--journals is required unless --preset paper is given")
    params = SynthParams(**kwargs)
    fmt = Format(args.format)
    with open(args.output, "w", encoding="utf-8", newline="") as fh:
        if fmt is Format.CSV:
            fh.write(",".join(CSV_HEADER) + "\n")
        for record in generate_corpus(params):
            fh.write(format_record(record, fmt))
            fh.write("\n")
    return EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` (default: ``sys.argv[1:]``), run a command, return the
    exit code. Never raises on expected failures; see module docstring for
    the code contract."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except InvalidParamsError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CitemetricError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(run())
